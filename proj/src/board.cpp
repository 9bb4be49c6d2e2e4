#include "quower/board.hpp"

#include <algorithm>
#include <stdexcept>

namespace quower {

BoardCover make_board_cover(int n, BoardVariant variant, std::vector<BoardPoint> centers) {
    if (n < 1) throw std::invalid_argument("board size must be positive");
    for (const auto& p : centers)
        if (p.a < 0 || p.a >= n || p.b < 0 || p.b >= n)
            throw std::invalid_argument("center out of range");
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    return BoardCover{n, variant, std::move(centers)};
}

std::vector<BoardPoint> quower(int n, BoardPoint p) {
    if (n < 1 || p.a < 0 || p.a >= n || p.b < 0 || p.b >= n)
        throw std::invalid_argument("quower center out of range");
    std::vector<BoardPoint> cells;
    cells.reserve(3 * n);
    for (int t = 0; t < n; ++t) {
        cells.push_back({(p.a + t) % n, (p.b + t) % n});
        cells.push_back({p.a, t});
        cells.push_back({t, p.b});
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

int delta(int n, BoardPoint p) {
    int d = (p.b - p.a) % n;
    return d < 0 ? d + n : d;
}

std::vector<BoardPoint> board_cells(int n, BoardVariant variant) {
    std::vector<BoardPoint> cells;
    cells.reserve(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (variant == BoardVariant::Full || a != b) cells.push_back({a, b});
    return cells;
}

CoverReport is_cover(const BoardCover& c) {
    const int n = c.n;
    std::vector<char> hit(static_cast<size_t>(n) * n, 0);
    for (const auto& p : c.centers) {
        if (p.a < 0 || p.a >= n || p.b < 0 || p.b >= n)
            throw std::invalid_argument("center out of range");
        for (int t = 0; t < n; ++t) {
            hit[static_cast<size_t>((p.a + t) % n) * n + (p.b + t) % n] = 1;
            hit[static_cast<size_t>(p.a) * n + t] = 1;
            hit[static_cast<size_t>(t) * n + p.b] = 1;
        }
    }
    CoverReport r;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (c.variant == BoardVariant::Punctured && a == b) continue;
            if (!hit[static_cast<size_t>(a) * n + b]) r.uncovered.push_back({a, b});
        }
    r.covered = r.uncovered.empty();
    return r;
}

std::string variant_name(BoardVariant v) {
    return v == BoardVariant::Full ? "full" : "punctured";
}

BoardVariant variant_from_name(const std::string& s) {
    if (s == "full") return BoardVariant::Full;
    if (s == "punctured") return BoardVariant::Punctured;
    throw std::invalid_argument("unknown board variant: " + s);
}

std::string render_board(const BoardCover& c) {
    std::vector<char> mark(static_cast<size_t>(c.n) * c.n, '.');
    if (c.variant == BoardVariant::Punctured)
        for (int t = 0; t < c.n; ++t) mark[static_cast<size_t>(t) * c.n + t] = '#';
    for (const auto& p : c.centers) mark[static_cast<size_t>(p.a) * c.n + p.b] = 'Q';
    std::string out;
    for (int b = c.n - 1; b >= 0; --b) {
        for (int a = 0; a < c.n; ++a) {
            out += mark[static_cast<size_t>(a) * c.n + b];
            out += a + 1 == c.n ? '\n' : ' ';
        }
    }
    return out;
}

}  // namespace quower
