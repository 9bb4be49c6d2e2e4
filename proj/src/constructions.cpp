#include "quower/constructions.hpp"

#include <stdexcept>
#include <string>

namespace quower {

namespace {

BoardCover checked(BoardCover c, const char* who) {
    if (!is_cover(c).covered)
        throw std::runtime_error(std::string(who) + ": construction failed to cover");
    return c;
}

int mod(int v, int n) {
    int r = v % n;
    return r < 0 ? r + n : r;
}

}  // namespace

BoardCover cover_even_2mod4(int n, BoardVariant variant) {
    if (n < 2 || n % 4 != 2) throw std::invalid_argument("cover_even_2mod4 needs n == 2 mod 4");
    std::vector<BoardPoint> centers;
    for (int i = 1; i <= n / 2; ++i)
        centers.push_back({mod(2 * i - 1, n), mod(n + 1 - 2 * i, n)});
    return checked(make_board_cover(n, variant, std::move(centers)), "cover_even_2mod4");
}

BoardCover cover_punctured_0mod4(int n) {
    if (n < 4 || n % 4 != 0) throw std::invalid_argument("cover_punctured_0mod4 needs n == 0 mod 4");
    const int m = n / 4;
    std::vector<BoardPoint> centers;
    for (int i = 1; i <= m; ++i)  // deltas 2-4i: the even residues n-2, n-6, ...
        centers.push_back({mod(2 * i - 1, n), mod(n + 1 - 2 * i, n)});
    for (int j = 1; j < m; ++j)   // deltas -4j: the remaining nonzero evens
        centers.push_back({mod(2 * m + 2 * j - 1, n), mod(2 * m - 2 * j - 1, n)});
    centers.push_back({n - 1, 2 * m - 1});
    return checked(make_board_cover(n, BoardVariant::Punctured, std::move(centers)),
                   "cover_punctured_0mod4");
}

BoardCover product_lift(const BoardCover& base, int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("product_lift needs odd m");
    if (base.variant != BoardVariant::Full || !is_cover(base).covered)
        throw std::invalid_argument("product_lift needs a verified full cover");
    const int n = base.n, N = m * n;
    std::vector<BoardPoint> centers;
    for (const auto& c : base.centers)
        for (int s = 0; s < m; ++s)
            centers.push_back({mod(c.a + s * n, N), mod(c.b + (m - 1 - s) * n, N)});
    return checked(make_board_cover(N, BoardVariant::Full, std::move(centers)), "product_lift");
}

BoardCover cover_odd_blocks(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("cover_odd_blocks needs odd n >= 3");
    const int m = n / 3, r = n % 3;
    if (r == 0) {
        BoardCover base = make_board_cover(3, BoardVariant::Full, {{0, 1}, {2, 0}});
        return product_lift(base, m);
    }
    std::vector<BoardPoint> centers;
    for (int j = 0; j <= m; ++j) centers.push_back({j, m - j});
    for (int t = 1; t <= m; ++t) centers.push_back({m + t, mod(2 * m + 1 - t, n)});
    return checked(make_board_cover(n, BoardVariant::Full, std::move(centers)),
                   "cover_odd_blocks");
}

Bounds known_bounds(int n, BoardVariant variant) {
    if (n < 1) throw std::invalid_argument("board size must be positive");
    if (n == 1) return variant == BoardVariant::Full ? Bounds{1, 1} : Bounds{0, 0};
    if (n % 2 == 1) return {(n + 1) / 2, (2 * n + 1) / 3};
    if (variant == BoardVariant::Punctured) return {n / 2, n / 2};
    return n % 4 == 2 ? Bounds{n / 2, n / 2} : Bounds{n / 2 + 1, n / 2 + 1};
}

BoardCover best_construction(int n, BoardVariant variant) {
    if (n < 1) throw std::invalid_argument("board size must be positive");
    if (n == 1) {
        std::vector<BoardPoint> c;
        if (variant == BoardVariant::Full) c.push_back({0, 0});
        return make_board_cover(1, variant, std::move(c));
    }
    if (n % 2 == 1) {
        BoardCover c = cover_odd_blocks(n);
        return make_board_cover(n, variant, c.centers);  // full covers imply punctured
    }
    if (n % 4 == 2) return cover_even_2mod4(n, variant);
    if (variant == BoardVariant::Punctured) return cover_punctured_0mod4(n);
    BoardCover c = cover_punctured_0mod4(n);
    c.centers.push_back({0, 0});  // any diagonal center completes the full board
    return checked(make_board_cover(n, BoardVariant::Full, std::move(c.centers)),
                   "best_construction");
}

}  // namespace quower
