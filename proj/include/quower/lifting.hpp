#pragma once

#include "quower/board.hpp"
#include "quower/projective.hpp"

#include <utility>

namespace quower {

// The board-to-plane dictionary for n = q-1: cell (a,b) of Z_n^2 maps to the
// midland point (g^a : g^b : 1), carrying quowers onto the midland parts of
// wind roses and the board diagonal onto the line through (0:0:1), (1:1:0).
ProjPoint psi(const FieldSpec& F, int a, int b);
std::pair<int, int> psi_inv(const FieldSpec& F, const ProjPoint& p);  // p midland

// Punctured cover of Z_{q-1}^2 to a short cover of F_q^3 of size |X|+2:
// the psi images plus the two centers (0,0,1) and (1,1,0). Requires prime
// power q >= 5 and a verified cover.
ShortCover lift(const BoardCover& X, uint32_t q);

// Rewrites a verified wind-rose cover of size <= q-2 (q >= 7) into one of
// the same size or smaller whose members are one cardinal, one coast point
// on the line avoiding that cardinal, and midlands otherwise. Each rewrite
// step preserves coverage; the result is re-verified.
ShortCover normalize_cover(const ShortCover& c);

// Inverse direction of the correspondence for covers in the normal shape
// produced by normalize_cover: moves the cardinal to (0:0:1) and the coast
// point to (1:1:0) by an automorphism, then pulls the midlands back through
// psi. The result covers the punctured board and has size |c|-2.
BoardCover extract(const ShortCover& c);

}  // namespace quower
