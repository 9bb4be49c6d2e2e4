#pragma once

#include "quower/field.hpp"

#include <array>
#include <compare>
#include <vector>

namespace quower {

// A vector of F_q^3, coordinates stored as field element ranks.
using Vec3 = std::array<uint32_t, 3>;

// A point of PG(2,q): homogeneous coordinates scaled so the last nonzero
// coordinate is 1. Ordering is lexicographic on (x, y, z) ranks; this is the
// tie-break order used everywhere a smallest point is chosen.
struct ProjPoint {
    uint32_t x = 0, y = 0, z = 0;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

// Number of nonzero coordinates: 1 cardinal, 2 coast, 3 midland. The three
// cardinals are the standard basis points; coast points lie on the three
// lines spanned by pairs of cardinals.
enum class PointClass { Cardinal, Coast, Midland };

ProjPoint normalize_point(const FieldSpec& F, const Vec3& v);  // v != 0
Vec3 as_vec(const ProjPoint& p);
PointClass classify(const ProjPoint& p);

// All q^2+q+1 points: z=1 block row-major by (x, y), then y=1, then (1:0:0).
std::vector<ProjPoint> all_points(const FieldSpec& F);
int point_index(const FieldSpec& F, const ProjPoint& p);  // position in that order

// The q+1 points of the line through distinct points u, v; sorted.
std::vector<ProjPoint> line_through(const FieldSpec& F, ProjPoint u, ProjPoint v);

// Union of the lines joining p to each of the three cardinals (the line
// degenerates to {p} when p is that cardinal). 3q+1 points for midland p,
// 2q+1 for coast and cardinal p. Sorted.
std::vector<ProjPoint> wind_rose(const FieldSpec& F, ProjPoint p);

// x lies in the extended ball of v: some multiple t*v is within Hamming
// distance 1 of x.
bool ball_contains(const FieldSpec& F, const Vec3& v, const Vec3& x);

// Covering of F_q^3 by extended balls around nonzero center vectors.
struct ShortCover {
    Field field;
    std::vector<Vec3> centers;  // sorted by the order of their spanned points
};

// Validates centers nonzero, dedupes projectively equal ones keeping the
// first representative. Throws std::invalid_argument.
ShortCover make_short_cover(Field f, std::vector<Vec3> centers);

struct ShortCoverReport {
    bool covered = false;
    std::vector<Vec3> uncovered;  // vectors missed by every ball
};

// Checks every vector of F_q^3 against the balls of the centers.
ShortCoverReport is_short_cover(const ShortCover& c);

// Do the wind roses of the centers' points cover all of PG(2,q)?
bool roses_cover_plane(const FieldSpec& F, const std::vector<ProjPoint>& pts);

// Coordinate permutation combined with nonzero coordinate scalings:
// f(x)_t = scale[t] * x[perm[t]]. These preserve point class and map wind
// roses onto wind roses.
struct Automorphism {
    std::array<int, 3> perm = {0, 1, 2};
    Vec3 scale = {1, 1, 1};
};

ProjPoint apply_automorphism(const FieldSpec& F, const Automorphism& f, const ProjPoint& p);

struct EquivalenceReport {
    bool balls_cover = false;
    bool roses_cover = false;
    bool agree = false;  // the two verdicts coincide
};

// Confirms pts are exactly the points spanned by the center vectors, then
// compares ball coverage of F_q^3 with wind-rose coverage of PG(2,q).
EquivalenceReport equivalence_check(const FieldSpec& F, const std::vector<ProjPoint>& pts,
                                    const std::vector<Vec3>& reps);

}  // namespace quower
