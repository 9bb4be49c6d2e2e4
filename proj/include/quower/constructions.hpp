#pragma once

#include "quower/board.hpp"

namespace quower {

// Closed-form quower coverings. All constructions return verified covers;
// they throw std::invalid_argument when n is outside their stated domain.

// n == 2 mod 4: the anti-diagonal comb {(2i-1, n+1-2i) : i = 1..n/2} (mod n).
// Covers both variants with n/2 centers, which meets the lower bound.
BoardCover cover_even_2mod4(int n, BoardVariant variant = BoardVariant::Full);

// n == 0 mod 4: covers the punctured board with n/2 centers. The deltas of
// the first two blocks of centers hit every nonzero even residue exactly once.
BoardCover cover_punctured_0mod4(int n);

// odd n >= 3: covers the full board with floor((2n+1)/3) centers, via two
// staircase blocks, or for n divisible by 3 by lifting a 3x3 base cover.
BoardCover cover_odd_blocks(int n);

// Blow-up of a full cover of Z_n^2 to Z_{mn}^2 for odd m: each center is
// repeated once per block column, descending one block row per step.
BoardCover product_lift(const BoardCover& base, int m);

struct Bounds {
    int lower = 0;
    int upper = 0;
};

// Best proven bounds on the minimum cover size. Exact (lower == upper) for
// all even n; for odd n the gap is between (n+1)/2 and floor((2n+1)/3).
Bounds known_bounds(int n, BoardVariant variant);

// A verified cover from the construction family fitting n and the variant;
// its size always meets known_bounds(n, variant).upper.
BoardCover best_construction(int n, BoardVariant variant);

}  // namespace quower
