#include "quower/constructions.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace quower;

TEST_CASE("even 2 mod 4 construction covers with n/2 centers") {
    for (int n = 2; n <= 42; n += 4) {
        auto c = cover_even_2mod4(n);
        CHECK(c.centers.size() == static_cast<size_t>(n / 2));
        CHECK(is_cover(c).covered);
        auto cp = cover_even_2mod4(n, BoardVariant::Punctured);
        CHECK(is_cover(cp).covered);
    }
    CHECK_THROWS_AS(cover_even_2mod4(8), std::invalid_argument);
    CHECK_THROWS_AS(cover_even_2mod4(7), std::invalid_argument);
}

TEST_CASE("even 2 mod 4 construction gives the known 6x6 cover") {
    auto c = cover_even_2mod4(6);
    CHECK(c.centers == std::vector<BoardPoint>{{1, 5}, {3, 3}, {5, 1}});
}

TEST_CASE("0 mod 4 punctured construction covers with n/2 centers") {
    for (int n = 4; n <= 40; n += 4) {
        auto c = cover_punctured_0mod4(n);
        CHECK(c.variant == BoardVariant::Punctured);
        CHECK(c.centers.size() == static_cast<size_t>(n / 2));
        CHECK(is_cover(c).covered);
    }
    CHECK_THROWS_AS(cover_punctured_0mod4(6), std::invalid_argument);
}

TEST_CASE("0 mod 4 construction matches the known 12-board set") {
    auto c = cover_punctured_0mod4(12);
    std::vector<BoardPoint> expect{{1, 11}, {3, 9}, {5, 7}, {7, 3}, {9, 1}, {11, 5}};
    CHECK(c.centers == expect);
}

TEST_CASE("deltas of the first two 0 mod 4 blocks hit each nonzero even residue once") {
    for (int n = 8; n <= 32; n += 4) {
        auto c = cover_punctured_0mod4(n);
        std::multiset<int> deltas;
        for (const auto& p : c.centers)
            if (!(p.a == n - 1 && p.b == n / 2 - 1))  // exclude the closing center
                deltas.insert(delta(n, p));
        std::multiset<int> expect;
        for (int r = 2; r < n; r += 2) expect.insert(r);
        CHECK(deltas == expect);
    }
}

TEST_CASE("odd staircase construction covers with floor((2n+1)/3) centers") {
    for (int n = 3; n <= 39; n += 2) {
        auto c = cover_odd_blocks(n);
        CHECK(c.centers.size() == static_cast<size_t>((2 * n + 1) / 3));
        CHECK(is_cover(c).covered);
    }
    CHECK_THROWS_AS(cover_odd_blocks(8), std::invalid_argument);
    CHECK_THROWS_AS(cover_odd_blocks(1), std::invalid_argument);
}

TEST_CASE("known small staircases") {
    CHECK(cover_odd_blocks(5).centers == std::vector<BoardPoint>{{0, 1}, {1, 0}, {2, 2}});
    CHECK(cover_odd_blocks(3).centers == std::vector<BoardPoint>{{0, 1}, {2, 0}});
}

TEST_CASE("product lift multiplies size by odd m and covers") {
    BoardCover base = make_board_cover(3, BoardVariant::Full, {{0, 1}, {2, 0}});
    for (int m : {1, 3, 5, 7}) {
        auto c = product_lift(base, m);
        CHECK(c.n == 3 * m);
        CHECK(c.centers.size() == base.centers.size() * m);
        CHECK(is_cover(c).covered);
    }
    CHECK_THROWS_AS(product_lift(base, 2), std::invalid_argument);
    BoardCover not_cover = make_board_cover(3, BoardVariant::Full, {{0, 1}});
    CHECK_THROWS_AS(product_lift(not_cover, 3), std::invalid_argument);
}

TEST_CASE("bounds are exact for even n and bracket for odd n") {
    CHECK(known_bounds(6, BoardVariant::Full).lower == 3);
    CHECK(known_bounds(6, BoardVariant::Full).upper == 3);
    CHECK(known_bounds(8, BoardVariant::Full).lower == 5);
    CHECK(known_bounds(8, BoardVariant::Full).upper == 5);
    CHECK(known_bounds(8, BoardVariant::Punctured).lower == 4);
    CHECK(known_bounds(8, BoardVariant::Punctured).upper == 4);
    CHECK(known_bounds(12, BoardVariant::Punctured).upper == 6);
    CHECK(known_bounds(13, BoardVariant::Full).lower == 7);
    CHECK(known_bounds(13, BoardVariant::Full).upper == 9);
    CHECK(known_bounds(1, BoardVariant::Full).lower == 1);
    CHECK(known_bounds(1, BoardVariant::Punctured).upper == 0);
    CHECK_THROWS_AS(known_bounds(0, BoardVariant::Full), std::invalid_argument);
}

TEST_CASE("best_construction meets the upper bound everywhere") {
    for (int n = 1; n <= 40; ++n)
        for (BoardVariant v : {BoardVariant::Full, BoardVariant::Punctured}) {
            auto c = best_construction(n, v);
            CHECK(is_cover(c).covered);
            CHECK(c.centers.size() == static_cast<size_t>(known_bounds(n, v).upper));
            CHECK(c.variant == v);
            CHECK(c.n == n);
        }
}
