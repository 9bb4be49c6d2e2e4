#pragma once

#include <compare>
#include <string>
#include <vector>

namespace quower {

// Cells of the toroidal board Z_n x Z_n, 0-based coordinates.
struct BoardPoint {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const BoardPoint&, const BoardPoint&) = default;
};

enum class BoardVariant { Full, Punctured };

// A candidate covering of the board: Full covers all n^2 cells, Punctured
// covers everything off the main diagonal a == b.
struct BoardCover {
    int n = 0;
    BoardVariant variant = BoardVariant::Full;
    std::vector<BoardPoint> centers;  // sorted, unique, coordinates in [0, n)
};

struct CoverReport {
    bool covered = false;
    std::vector<BoardPoint> uncovered;  // sorted
};

// Validates ranges, sorts and dedupes centers. Throws std::invalid_argument.
BoardCover make_board_cover(int n, BoardVariant variant, std::vector<BoardPoint> centers);

// The quower at p: diagonal {p + (t,t)}, column {(p.a, t)}, row {(t, p.b)}.
// Sorted; size 3n-2 for n >= 2.
std::vector<BoardPoint> quower(int n, BoardPoint p);

// Diagonal index b - a mod n; x lies on the diagonal through p iff
// delta(n, x) == delta(n, p).
int delta(int n, BoardPoint p);

// Cells of the board under the given variant, sorted.
std::vector<BoardPoint> board_cells(int n, BoardVariant variant);

CoverReport is_cover(const BoardCover& c);

std::string variant_name(BoardVariant v);
BoardVariant variant_from_name(const std::string& s);

// Text rendering, one row per line with row b = n-1 on top, 'Q' marking
// centers and '.' other cells ('#' for excluded diagonal cells).
std::string render_board(const BoardCover& c);

}  // namespace quower
