#include "quower/lifting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quower {

namespace {

const ProjPoint kCardinal[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

int nonzero_pos(const ProjPoint& p) {  // cardinal
    return p.x != 0 ? 0 : p.y != 0 ? 1 : 2;
}

int zero_pos(const ProjPoint& p) {  // coast
    return p.x == 0 ? 0 : p.y == 0 ? 1 : 2;
}

uint32_t coord(const ProjPoint& p, int t) { return t == 0 ? p.x : t == 1 ? p.y : p.z; }

// The coast line {x_t = 0}, i.e. the line through the two other cardinals.
std::vector<ProjPoint> coast_line(const FieldSpec& F, int t) {
    return line_through(F, kCardinal[(t + 1) % 3], kCardinal[(t + 2) % 3]);
}

bool contains_all(const std::vector<ProjPoint>& big, const std::vector<ProjPoint>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<ProjPoint> sorted_points(const ShortCover& c) {
    std::set<ProjPoint> s;
    for (const auto& v : c.centers) s.insert(normalize_point(*c.field, v));
    return {s.begin(), s.end()};
}

ShortCover points_to_cover(Field f, const std::vector<ProjPoint>& pts) {
    std::vector<Vec3> vecs;
    vecs.reserve(pts.size());
    for (const auto& p : pts) vecs.push_back(as_vec(p));
    return make_short_cover(std::move(f), std::move(vecs));
}

}  // namespace

ProjPoint psi(const FieldSpec& F, int a, int b) {
    if (F.q < 2) throw std::invalid_argument("psi needs q >= 2");
    const int n = static_cast<int>(F.q) - 1;
    auto red = [n](int v) {
        int r = v % n;
        return r < 0 ? r + n : r;
    };
    return {F.gen_pow(static_cast<uint32_t>(red(a))), F.gen_pow(static_cast<uint32_t>(red(b))), 1};
}

std::pair<int, int> psi_inv(const FieldSpec& F, const ProjPoint& p) {
    if (classify(p) != PointClass::Midland || p.z != 1)
        throw std::invalid_argument("psi_inv needs a normalized midland point");
    return {static_cast<int>(F.dlog(p.x)), static_cast<int>(F.dlog(p.y))};
}

ShortCover lift(const BoardCover& X, uint32_t q) {
    Field f = field(q);  // throws domain_error unless q is a prime power
    if (q < 5) throw std::invalid_argument("lift needs q >= 5");
    if (X.variant != BoardVariant::Punctured || X.n != static_cast<int>(q) - 1)
        throw std::invalid_argument("lift needs a punctured cover of Z_(q-1)^2");
    if (!is_cover(X).covered) throw std::invalid_argument("lift input does not cover the board");
    const FieldSpec& F = *f;
    std::vector<Vec3> centers;
    centers.reserve(X.centers.size() + 2);
    for (const auto& c : X.centers) centers.push_back(as_vec(psi(F, c.a, c.b)));
    centers.push_back({0, 0, 1});
    centers.push_back({1, 1, 0});
    ShortCover out = make_short_cover(std::move(f), std::move(centers));
    if (out.centers.size() != X.centers.size() + 2 || !roses_cover_plane(F, sorted_points(out)))
        throw std::runtime_error("lift produced a non-cover");
    return out;
}

ShortCover normalize_cover(const ShortCover& c) {
    if (!c.field) throw std::invalid_argument("short cover needs a field");
    const FieldSpec& F = *c.field;
    const uint32_t q = F.q;
    if (q < 7) throw std::invalid_argument("normalization needs q >= 7");
    std::vector<ProjPoint> wr = sorted_points(c);
    if (wr.size() > q - 2)
        throw std::invalid_argument("normalization needs at most q-2 wind roses");
    if (!roses_cover_plane(F, wr)) throw std::invalid_argument("wind roses do not cover the plane");

    auto verify = [&](std::vector<ProjPoint> next) {
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (!roses_cover_plane(F, next)) throw std::runtime_error("rewrite step broke the cover");
        return next;
    };
    auto lex_min_of_class = [&](const std::vector<ProjPoint>& line, PointClass want) {
        for (const auto& p : line)  // lines are sorted
            if (classify(p) == want) return p;
        throw std::runtime_error("line misses expected point class");
    };

    bool done = false;
    for (int guard = 0; guard < 256 && !done; ++guard) {
        std::vector<ProjPoint> cards, coasts;
        for (const auto& p : wr)
            if (classify(p) == PointClass::Cardinal) cards.push_back(p);
            else if (classify(p) == PointClass::Coast) coasts.push_back(p);

        if (cards.size() >= 2) {
            // Drop a cardinal whose two coast lines are held by other members
            // (largest first). Three cardinals always admit such a drop.
            bool dropped = false;
            for (auto it = cards.rbegin(); it != cards.rend() && !dropped; ++it) {
                int i = nonzero_pos(*it);
                std::vector<std::vector<ProjPoint>> other_roses;
                for (const auto& p : wr)
                    if (p != *it) other_roses.push_back(wind_rose(F, p));
                auto held = [&](const std::vector<ProjPoint>& L) {
                    for (const auto& r : other_roses)
                        if (contains_all(r, L)) return true;
                    return false;
                };
                if (held(coast_line(F, (i + 1) % 3)) && held(coast_line(F, (i + 2) % 3))) {
                    std::vector<ProjPoint> next;
                    for (const auto& p : wr)
                        if (p != *it) next.push_back(p);
                    wr = verify(std::move(next));
                    dropped = true;
                }
            }
            if (dropped) continue;
            // Exactly two non-redundant cardinals: swap the larger for a coast
            // point on the line joining it to the absent cardinal.
            ProjPoint keep = cards[0], drop = cards[1];
            int j = nonzero_pos(drop), k = 3 - nonzero_pos(keep) - j;
            ProjPoint p = lex_min_of_class(line_through(F, kCardinal[j], kCardinal[k]),
                                           PointClass::Coast);
            std::vector<ProjPoint> next{p};
            for (const auto& x : wr)
                if (x != drop) next.push_back(x);
            wr = verify(std::move(next));
            continue;
        }

        if (cards.empty()) {
            // Each coast line must be held by a coast member on it. Trade the
            // members on lines y=0 and z=0 for the cardinal (1:0:0) plus the
            // midland meeting point of their rose lines.
            ProjPoint per[3];
            bool have[3] = {false, false, false};
            for (const auto& y : coasts) {
                int t = zero_pos(y);
                if (!have[t] || y < per[t]) per[t] = y, have[t] = true;
            }
            if (!have[0] || !have[1] || !have[2])
                throw std::runtime_error("coast line without a coast member");
            ProjPoint p2 = per[1], p3 = per[2];  // (a:0:1), (b:1:0)
            uint32_t a = p2.x, b = p3.x;
            ProjPoint x{a, F.mul(a, F.inv(b)), 1};
            std::vector<ProjPoint> next{kCardinal[0], x};
            for (const auto& y : wr)
                if (y != p2 && y != p3) next.push_back(y);
            wr = verify(std::move(next));
            continue;
        }

        // Exactly one cardinal: keep the smallest coast member on the line
        // avoiding it, rewrite every other coast member to the midland that
        // spans the same rose line through its opposite cardinal.
        int i = nonzero_pos(cards[0]);
        ProjPoint keep;
        bool found = false;
        for (const auto& y : coasts)
            if (zero_pos(y) == i && (!found || y < keep)) keep = y, found = true;
        if (!found) throw std::runtime_error("opposite coast line without a coast member");
        std::vector<ProjPoint> extras;
        for (const auto& y : coasts)
            if (y != keep) extras.push_back(y);
        if (extras.empty()) {  // normal shape reached
            done = true;
            continue;
        }
        ProjPoint y = extras.front();
        ProjPoint x = lex_min_of_class(line_through(F, y, kCardinal[zero_pos(y)]),
                                       PointClass::Midland);
        std::vector<ProjPoint> next{x};
        for (const auto& p : wr)
            if (p != y) next.push_back(p);
        wr = verify(std::move(next));
    }

    if (!done) throw std::runtime_error("normalization did not reach the normal shape");
    ShortCover out = points_to_cover(c.field, wr);
    if (out.centers.size() > c.centers.size())
        throw std::runtime_error("normalization grew the cover");
    return out;
}

BoardCover extract(const ShortCover& c) {
    if (!c.field) throw std::invalid_argument("short cover needs a field");
    const FieldSpec& F = *c.field;
    const uint32_t q = F.q;
    if (q < 7) throw std::invalid_argument("extraction needs q >= 7");
    std::vector<ProjPoint> wr = sorted_points(c);
    if (!roses_cover_plane(F, wr)) throw std::invalid_argument("wind roses do not cover the plane");

    std::vector<ProjPoint> cards, coasts, mids;
    for (const auto& p : wr) {
        switch (classify(p)) {
            case PointClass::Cardinal: cards.push_back(p); break;
            case PointClass::Coast: coasts.push_back(p); break;
            case PointClass::Midland: mids.push_back(p); break;
        }
    }
    if (cards.size() != 1 || coasts.size() != 1)
        throw std::invalid_argument("extract needs the normal shape (one cardinal, one coast)");
    const int ci = nonzero_pos(cards[0]);
    const ProjPoint y = coasts[0];
    if (zero_pos(y) != ci)
        throw std::invalid_argument("extract needs the coast member on the line avoiding the cardinal");

    Automorphism f;
    f.perm = {ci == 0 ? 1 : 0, ci == 2 ? 1 : 2, ci};  // the two non-ci axes, ascending
    f.scale = {F.inv(coord(y, f.perm[0])), F.inv(coord(y, f.perm[1])), 1};
    if (apply_automorphism(F, f, cards[0]) != ProjPoint{0, 0, 1} ||
        apply_automorphism(F, f, y) != ProjPoint{1, 1, 0})
        throw std::runtime_error("extract map failed to reach the anchor pair");

    std::vector<BoardPoint> centers;
    centers.reserve(mids.size());
    for (const auto& p : mids) {
        ProjPoint m = apply_automorphism(F, f, p);
        auto [a, b] = psi_inv(F, m);
        centers.push_back({a, b});
    }
    BoardCover out =
        make_board_cover(static_cast<int>(q) - 1, BoardVariant::Punctured, std::move(centers));
    if (out.centers.size() != mids.size() || !is_cover(out).covered)
        throw std::runtime_error("extracted centers do not cover the punctured board");
    return out;
}

}  // namespace quower
