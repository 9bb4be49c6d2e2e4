#include "quower/lifting.hpp"

#include "quower/constructions.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using namespace quower;

namespace {

std::vector<ProjPoint> points_of(const ShortCover& c) {
    std::set<ProjPoint> s;
    for (const auto& v : c.centers) s.insert(normalize_point(*c.field, v));
    return {s.begin(), s.end()};
}

ShortCover cover_of_points(uint32_t q, const std::vector<ProjPoint>& pts) {
    std::vector<Vec3> vecs;
    for (const auto& p : pts) vecs.push_back(as_vec(p));
    return make_short_cover(field(q), std::move(vecs));
}

BoardCover punctured(int n, std::vector<BoardPoint> centers) {
    return make_board_cover(n, BoardVariant::Punctured, std::move(centers));
}

}  // namespace

TEST_CASE("psi is a bijection onto the midlands and psi_inv undoes it") {
    for (uint32_t q : {5u, 7u, 9u}) {
        const FieldSpec& F = *field(q);
        int n = static_cast<int>(q) - 1;
        std::set<ProjPoint> image;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                ProjPoint p = psi(F, a, b);
                CHECK(classify(p) == PointClass::Midland);
                CHECK(psi_inv(F, p) == std::pair<int, int>{a, b});
                image.insert(p);
            }
        CHECK(image.size() == static_cast<size_t>(n) * n);  // all (q-1)^2 midlands
        // indices are classes mod q-1
        CHECK(psi(F, n, 0) == psi(F, 0, 0));
        CHECK(psi(F, -1, 2 * n + 3) == psi(F, n - 1, 3));
        CHECK_THROWS_AS(psi_inv(F, ProjPoint{1, 1, 0}), std::invalid_argument);
        CHECK_THROWS_AS(psi_inv(F, ProjPoint{0, 0, 1}), std::invalid_argument);
    }
}

TEST_CASE("psi carries quowers onto the midland parts of wind roses") {
    for (uint32_t q : {5u, 8u, 9u}) {
        const FieldSpec& F = *field(q);
        int n = static_cast<int>(q) - 1;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::set<ProjPoint> image;
                for (const auto& cell : quower::quower(n, {a, b})) image.insert(psi(F, cell.a, cell.b));
                std::set<ProjPoint> rose_mids;
                for (const auto& w : wind_rose(F, psi(F, a, b)))
                    if (classify(w) == PointClass::Midland) rose_mids.insert(w);
                CHECK(image == rose_mids);
            }
    }
}

TEST_CASE("psi carries the board diagonal onto the anchor line's midlands") {
    const FieldSpec& F = *field(7);
    std::set<ProjPoint> diag;
    for (int c = 0; c < 6; ++c) diag.insert(psi(F, c, c));
    std::set<ProjPoint> line_mids;
    for (const auto& p : line_through(F, ProjPoint{0, 0, 1}, ProjPoint{1, 1, 0}))
        if (classify(p) == PointClass::Midland) line_mids.insert(p);
    CHECK(diag == line_mids);
}

TEST_CASE("lift adds the two anchors and produces verified covers") {
    struct Case {
        uint32_t q;
        size_t board_size;
    };
    for (Case c : std::vector<Case>{{5, 2}, {7, 3}, {8, 5}, {9, 4}, {13, 6}}) {
        int n = static_cast<int>(c.q) - 1;
        BoardCover X = best_construction(n, BoardVariant::Punctured);
        REQUIRE(X.centers.size() == c.board_size);
        ShortCover L = lift(X, c.q);
        CHECK(L.centers.size() == c.board_size + 2);
        CHECK(is_short_cover(L).covered);
        auto pts = points_of(L);
        CHECK(std::count(pts.begin(), pts.end(), ProjPoint{0, 0, 1}) == 1);
        CHECK(std::count(pts.begin(), pts.end(), ProjPoint{1, 1, 0}) == 1);
    }
}

TEST_CASE("lift of the four-center cover of the punctured 8-board") {
    BoardCover X = cover_punctured_0mod4(8);
    REQUIRE(X.centers == std::vector<BoardPoint>{{1, 7}, {3, 5}, {5, 1}, {7, 3}});
    ShortCover L = lift(X, 9);
    CHECK(points_of(L) == std::vector<ProjPoint>{{0, 0, 1},
                                                 {1, 1, 0},
                                                 {4, 5, 1},
                                                 {5, 7, 1},
                                                 {7, 8, 1},
                                                 {8, 4, 1}});
}

TEST_CASE("lift rejects the wrong board, size, or field") {
    CHECK_THROWS_AS(lift(best_construction(4, BoardVariant::Full), 5), std::invalid_argument);
    CHECK_THROWS_AS(lift(best_construction(4, BoardVariant::Punctured), 7),
                    std::invalid_argument);  // n must be q-1
    CHECK_THROWS_AS(lift(best_construction(4, BoardVariant::Punctured), 6), std::domain_error);
    CHECK_THROWS_AS(lift(best_construction(3, BoardVariant::Punctured), 4),
                    std::invalid_argument);  // q too small
    CHECK_THROWS_AS(lift(punctured(6, {{0, 1}}), 7), std::invalid_argument);  // not a cover
}

TEST_CASE("normalization fixes covers already in the normal shape") {
    BoardCover X = best_construction(6, BoardVariant::Punctured);
    ShortCover L = lift(X, 7);
    ShortCover N = normalize_cover(L);
    CHECK(points_of(N) == points_of(L));
}

TEST_CASE("normalization trades two surviving cardinals for a coast and a midland") {
    // psi images of the 8-board cover plus both excess cardinals and the coast
    // anchor: rewrite keeps (0:1:0), swaps (1:0:0) for the smallest coast on
    // the line it spans with the absent cardinal, then swaps the off-line
    // coast (1:1:0) for the smallest midland over its opposite cardinal.
    const FieldSpec& F = *field(9);
    std::vector<ProjPoint> start = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
    for (const auto& c : cover_punctured_0mod4(8).centers) start.push_back(psi(F, c.a, c.b));
    ShortCover N = normalize_cover(cover_of_points(9, start));
    CHECK(points_of(N) == std::vector<ProjPoint>{{0, 1, 0},
                                                 {1, 0, 1},
                                                 {1, 1, 1},
                                                 {4, 5, 1},
                                                 {5, 7, 1},
                                                 {7, 8, 1},
                                                 {8, 4, 1}});
    BoardCover back = extract(N);
    CHECK(back.centers.size() == 5);
    CHECK(is_cover(back).covered);
}

TEST_CASE("normalization resolves the no-cardinal case through the coast trade") {
    const FieldSpec& F = *field(9);
    std::vector<ProjPoint> start = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    for (const auto& c : cover_punctured_0mod4(8).centers) start.push_back(psi(F, c.a, c.b));
    ShortCover N = normalize_cover(cover_of_points(9, start));
    CHECK(points_of(N) == std::vector<ProjPoint>{{0, 1, 1},
                                                 {1, 0, 0},
                                                 {1, 1, 1},
                                                 {4, 5, 1},
                                                 {5, 7, 1},
                                                 {7, 8, 1},
                                                 {8, 4, 1}});
    BoardCover back = extract(N);
    CHECK(back.centers.size() == 5);
    CHECK(is_cover(back).covered);
}

TEST_CASE("normalization drops redundant cardinals largest first") {
    // all three cardinals next to the lifted 10-board cover: two are covered
    // by the remaining roses and vanish, landing exactly on the plain lift
    const FieldSpec& F = *field(11);
    BoardCover X = best_construction(10, BoardVariant::Punctured);
    std::vector<ProjPoint> start = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
    for (const auto& c : X.centers) start.push_back(psi(F, c.a, c.b));
    REQUIRE(start.size() == 9);
    ShortCover N = normalize_cover(cover_of_points(11, start));
    CHECK(points_of(N) == points_of(lift(X, 11)));
    CHECK(extract(N).centers == X.centers);
}

TEST_CASE("normalize then extract undoes lift") {
    struct Case {
        uint32_t q;
        BoardCover X;
    };
    std::vector<Case> cases;
    cases.push_back({7, best_construction(6, BoardVariant::Punctured)});
    cases.push_back({8, punctured(7, {{0, 1}, {1, 3}, {2, 0}, {3, 2}})});
    cases.push_back({9, cover_punctured_0mod4(8)});
    for (const auto& c : cases) {
        REQUIRE(is_cover(c.X).covered);
        BoardCover back = extract(normalize_cover(lift(c.X, c.q)));
        CHECK(back.n == c.X.n);
        CHECK(back.variant == BoardVariant::Punctured);
        CHECK(back.centers == c.X.centers);
    }
}

TEST_CASE("normalization rejects small fields, oversize covers, and non-covers") {
    CHECK_THROWS_AS(normalize_cover(lift(best_construction(4, BoardVariant::Punctured), 5)),
                    std::invalid_argument);  // q < 7
    {
        auto pts = points_of(lift(best_construction(6, BoardVariant::Punctured), 7));
        pts.push_back(ProjPoint{2, 3, 1});  // six roses, one over the q-2 cap
        CHECK_THROWS_AS(normalize_cover(cover_of_points(7, pts)), std::invalid_argument);
    }
    CHECK_THROWS_AS(normalize_cover(cover_of_points(9, {{1, 1, 1}, {2, 3, 1}})),
                    std::invalid_argument);  // does not cover the plane
}

TEST_CASE("extraction rejects covers outside the normal shape") {
    auto base = points_of(lift(best_construction(6, BoardVariant::Punctured), 7));
    {
        auto pts = base;
        pts.push_back(ProjPoint{1, 0, 0});  // second cardinal
        CHECK_THROWS_AS(extract(cover_of_points(7, pts)), std::invalid_argument);
    }
    {
        auto pts = base;
        pts.push_back(ProjPoint{1, 0, 1});  // second coast
        CHECK_THROWS_AS(extract(cover_of_points(7, pts)), std::invalid_argument);
    }
    {
        // a real cover whose single coast sits on a line through the cardinal
        std::vector<ProjPoint> pts = {{0, 0, 1}, {0, 1, 1}};
        for (uint32_t t = 1; t < 7; ++t) pts.push_back(ProjPoint{t, 1, 1});
        REQUIRE(roses_cover_plane(*field(7), pts));
        CHECK_THROWS_AS(extract(cover_of_points(7, pts)), std::invalid_argument);
    }
    CHECK_THROWS_AS(extract(lift(best_construction(4, BoardVariant::Punctured), 5)),
                    std::invalid_argument);  // q < 7
}
