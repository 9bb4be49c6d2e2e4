#include "quower/projective.hpp"

#include <algorithm>
#include <stdexcept>

namespace quower {

namespace {

const ProjPoint kCardinal[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

void check_range(const FieldSpec& F, const Vec3& v) {
    for (uint32_t c : v)
        if (c >= F.q) throw std::invalid_argument("coordinate rank out of field range");
}

}  // namespace

ProjPoint normalize_point(const FieldSpec& F, const Vec3& v) {
    check_range(F, v);
    if (is_zero(v)) throw std::invalid_argument("cannot normalize the zero vector");
    int last = v[2] != 0 ? 2 : v[1] != 0 ? 1 : 0;
    uint32_t s = F.inv(v[last]);
    Vec3 w{F.mul(v[0], s), F.mul(v[1], s), F.mul(v[2], s)};
    return {w[0], w[1], w[2]};
}

Vec3 as_vec(const ProjPoint& p) { return {p.x, p.y, p.z}; }

PointClass classify(const ProjPoint& p) {
    int nz = (p.x != 0) + (p.y != 0) + (p.z != 0);
    switch (nz) {
        case 1: return PointClass::Cardinal;
        case 2: return PointClass::Coast;
        default: return PointClass::Midland;
    }
}

std::vector<ProjPoint> all_points(const FieldSpec& F) {
    std::vector<ProjPoint> pts;
    pts.reserve(static_cast<size_t>(F.q) * F.q + F.q + 1);
    for (uint32_t x = 0; x < F.q; ++x)
        for (uint32_t y = 0; y < F.q; ++y) pts.push_back({x, y, 1});
    for (uint32_t x = 0; x < F.q; ++x) pts.push_back({x, 1, 0});
    pts.push_back({1, 0, 0});
    return pts;
}

int point_index(const FieldSpec& F, const ProjPoint& p) {
    if (p.z == 1) return static_cast<int>(p.x * F.q + p.y);
    if (p.z == 0 && p.y == 1) return static_cast<int>(F.q * F.q + p.x);
    if (p.z == 0 && p.y == 0 && p.x == 1) return static_cast<int>(F.q * F.q + F.q);
    throw std::invalid_argument("point is not normalized");
}

std::vector<ProjPoint> line_through(const FieldSpec& F, ProjPoint u, ProjPoint v) {
    if (u == v) throw std::invalid_argument("line needs two distinct points");
    std::vector<ProjPoint> pts;
    pts.reserve(F.q + 1);
    pts.push_back(u);
    for (uint32_t t = 0; t < F.q; ++t) {
        Vec3 w{F.add(v.x, F.mul(t, u.x)), F.add(v.y, F.mul(t, u.y)),
               F.add(v.z, F.mul(t, u.z))};
        pts.push_back(normalize_point(F, w));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() != F.q + 1) throw std::runtime_error("projective line has wrong size");
    return pts;
}

std::vector<ProjPoint> wind_rose(const FieldSpec& F, ProjPoint p) {
    p = normalize_point(F, as_vec(p));
    std::vector<ProjPoint> pts;
    for (const auto& c : kCardinal) {
        if (p == c) {
            pts.push_back(p);
            continue;
        }
        auto line = line_through(F, p, c);
        pts.insert(pts.end(), line.begin(), line.end());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool ball_contains(const FieldSpec& F, const Vec3& v, const Vec3& x) {
    check_range(F, v);
    check_range(F, x);
    for (uint32_t t = 0; t < F.q; ++t) {
        int w = 0;
        for (int i = 0; i < 3; ++i) w += F.sub(x[i], F.mul(t, v[i])) != 0;
        if (w <= 1) return true;
    }
    return false;
}

ShortCover make_short_cover(Field f, std::vector<Vec3> centers) {
    if (!f) throw std::invalid_argument("short cover needs a field");
    const FieldSpec& F = *f;
    std::vector<std::pair<ProjPoint, Vec3>> keyed;
    keyed.reserve(centers.size());
    for (const auto& v : centers) {
        if (is_zero(v)) throw std::invalid_argument("short cover center must be nonzero");
        keyed.emplace_back(normalize_point(F, v), v);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Vec3> out;
    for (size_t i = 0; i < keyed.size(); ++i)
        if (i == 0 || keyed[i].first != keyed[i - 1].first) out.push_back(keyed[i].second);
    return ShortCover{std::move(f), std::move(out)};
}

ShortCoverReport is_short_cover(const ShortCover& c) {
    if (!c.field) throw std::invalid_argument("short cover needs a field");
    const FieldSpec& F = *c.field;
    ShortCoverReport r;
    Vec3 x;
    for (x[0] = 0; x[0] < F.q; ++x[0])
        for (x[1] = 0; x[1] < F.q; ++x[1])
            for (x[2] = 0; x[2] < F.q; ++x[2]) {
                bool hit = false;
                for (const auto& v : c.centers)
                    if (ball_contains(F, v, x)) {
                        hit = true;
                        break;
                    }
                if (!hit) r.uncovered.push_back(x);
            }
    r.covered = r.uncovered.empty();
    return r;
}

bool roses_cover_plane(const FieldSpec& F, const std::vector<ProjPoint>& pts) {
    std::vector<char> hit(static_cast<size_t>(F.q) * F.q + F.q + 1, 0);
    for (const auto& p : pts)
        for (const auto& w : wind_rose(F, p)) hit[point_index(F, w)] = 1;
    for (char h : hit)
        if (!h) return false;
    return true;
}

ProjPoint apply_automorphism(const FieldSpec& F, const Automorphism& f, const ProjPoint& p) {
    int seen[3] = {0, 0, 0};
    for (int t : f.perm) {
        if (t < 0 || t > 2) throw std::invalid_argument("automorphism permutation out of range");
        seen[t] = 1;
    }
    if (!(seen[0] && seen[1] && seen[2]))
        throw std::invalid_argument("automorphism permutation must be a bijection");
    Vec3 src = as_vec(p), dst;
    for (int t = 0; t < 3; ++t) {
        if (f.scale[t] == 0) throw std::invalid_argument("automorphism scale must be nonzero");
        dst[t] = F.mul(f.scale[t], src[f.perm[t]]);
    }
    return normalize_point(F, dst);
}

EquivalenceReport equivalence_check(const FieldSpec& F, const std::vector<ProjPoint>& pts,
                                    const std::vector<Vec3>& reps) {
    if (pts.size() != reps.size())
        throw std::invalid_argument("point and representative lists differ in length");
    for (size_t i = 0; i < pts.size(); ++i)
        if (normalize_point(F, reps[i]) != pts[i])
            throw std::invalid_argument("representative does not span its point");
    EquivalenceReport r;
    r.roses_cover = roses_cover_plane(F, pts);
    Field f = field(F.q);
    r.balls_cover = is_short_cover(make_short_cover(f, reps)).covered;
    r.agree = r.balls_cover == r.roses_cover;
    return r;
}

}  // namespace quower
