#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "starpart/candidates.hpp"

using namespace starpart;
using fixtures::pt;

namespace {

bool holds(const std::vector<Point>& sub, const std::vector<Point>& super) {
    std::set<Point, LexLess> s(super.begin(), super.end());
    for (const Point& q : sub)
        if (!s.count(q)) return false;
    return true;
}

void check_chain_invariants(const Polygon& P, const CandidateSets& cs) {
    CHECK(holds(P.pts, cs.s_bor));
    CHECK(holds(cs.s_bor, cs.s_int));
    CHECK(holds(cs.s_cen, cs.s_int));
    for (const Point& q : cs.s_int) CHECK(point_location(P, q) != Location::Exterior);
    for (const Point& q : cs.s_bor) CHECK(point_location(P, q) == Location::Boundary);
    CHECK(std::is_sorted(cs.s_int.begin(), cs.s_int.end(), lex_less));
}

}  // namespace

TEST_CASE("canonical points of a convex polygon are its corners") {
    auto H = fixtures::hexagon();
    auto can = canonical_points(H);
    std::vector<Point> corners = H.pts;
    std::sort(corners.begin(), corners.end(), lex_less);
    CHECK(can == corners);
}

TEST_CASE("canonical points of the L-shape add the two extension feet") {
    auto P = fixtures::lshape();
    auto can = canonical_points(P);
    std::vector<Point> want = P.pts;
    want.push_back(pt(1, 0));
    want.push_back(pt(0, 1));
    std::sort(want.begin(), want.end(), lex_less);
    CHECK(can == want);
}

TEST_CASE("canonical points of the comb include the tooth-wall feet") {
    auto P = fixtures::comb(3);
    auto can = canonical_points(P);
    CHECK(can.size() <= 3 * P.size());
    CHECK(holds(P.pts, can));
    CHECK(holds({pt(1, 0), pt(2, 0), pt(3, 0), pt(4, 0), pt(0, 1), pt(5, 1)}, can));
    for (const Point& q : can) CHECK(point_location(P, q) == Location::Boundary);
}

TEST_CASE("construction lines of a square: four edges and two diagonals") {
    auto sq = fixtures::unit_square();
    CHECK(construction_lines(sq, {}).size() == 6);
}

TEST_CASE("construction lines of the L-shape dedupe collinear corner pairs") {
    // (2,0),(1,1),(0,2) are collinear: C(6,2)=15 pairs give 13 lines
    CHECK(construction_lines(fixtures::lshape(), {}).size() == 13);
}

TEST_CASE("a tripod contributes its three point-support lines") {
    auto P = fixtures::lshape();
    FakeTripod t;
    t.point = pt(Rational(1, 3), Rational(1, 2));
    t.supports = {0, 1, 2};
    auto with = construction_lines(P, {t});
    CHECK(with.size() == 16);
}

TEST_CASE("center candidates of the square: corners plus the middle") {
    auto sq = fixtures::unit_square();
    auto cen = center_candidates(sq, construction_lines(sq, {}));
    std::vector<Point> want{pt(0, 0), pt(0, 1), pt(Rational(1, 2), Rational(1, 2)), pt(1, 0),
                            pt(1, 1)};
    CHECK(cen == want);
}

TEST_CASE("parallel lines give no center candidates") {
    std::vector<Line> lines{Line::through(pt(0, 0), pt(1, 0)), Line::through(pt(0, 1), pt(1, 1)),
                            Line::through(pt(0, 2), pt(1, 2))};
    CHECK(center_candidates(fixtures::unit_square(), lines).empty());
}

TEST_CASE("center candidates of the L-shape contain the key junction points") {
    auto P = fixtures::lshape();
    auto cen = center_candidates(P, construction_lines(P, {}));
    CHECK(holds({pt(1, 1), pt(1, 0), pt(0, 1)}, cen));
}

TEST_CASE("steiner sets for the square with its middle as the only center") {
    auto sq = fixtures::unit_square();
    Point mid = pt(Rational(1, 2), Rational(1, 2));
    auto cs = steiner_candidates(sq, {mid});
    check_chain_invariants(sq, cs);
    // center-corner lines are the two diagonals: no new boundary hits
    std::vector<Point> corners = sq.pts;
    std::sort(corners.begin(), corners.end(), lex_less);
    CHECK(cs.s_bor == corners);
    std::vector<Point> want_int = corners;
    want_int.push_back(mid);
    std::sort(want_int.begin(), want_int.end(), lex_less);
    CHECK(cs.s_int == want_int);
    CHECK(cs.provenance.at(mid) == "center");
    CHECK(cs.provenance.at(pt(0, 0)) == "corner");
}

TEST_CASE("a second center adds its own boundary hits") {
    auto sq = fixtures::unit_square();
    auto cs = steiner_candidates(
        sq, {pt(Rational(1, 2), Rational(1, 2)), pt(Rational(1, 4), Rational(1, 4))});
    check_chain_invariants(sq, cs);
    CHECK(holds({pt(0, Rational(1, 3)), pt(Rational(1, 3), 0)}, cs.s_bor));
}

TEST_CASE("corner centers make the boundary set cover the canonical points") {
    auto P = fixtures::lshape();
    auto cs = steiner_candidates(P, P.pts);
    check_chain_invariants(P, cs);
    CHECK(holds(canonical_points(P), cs.s_bor));
}

TEST_CASE("empty center set is rejected") {
    CHECK_THROWS_AS((void)steiner_candidates(fixtures::unit_square(), {}), GeomError);
}

TEST_CASE("size bounds hold with a frozen constant") {
    auto check_bounds = [](const Polygon& P, const CandidateSets& cs) {
        double n = static_cast<double>(P.size());
        double m = static_cast<double>(cs.s_cen.size());
        CHECK(static_cast<double>(cs.s_bor.size()) <= 2 * n * m * m);
        CHECK(static_cast<double>(cs.s_int.size()) <= 2 * n * n * m * m * m * m * m);
    };
    auto sq = fixtures::unit_square();
    check_bounds(sq, steiner_candidates(sq, {pt(Rational(1, 2), Rational(1, 2))}));
    auto P = fixtures::lshape();
    check_bounds(P, steiner_candidates(P, {pt(Rational(1, 2), Rational(1, 2)), pt(1, 1)}));
}

TEST_CASE("capping truncates by priority or fails loudly") {
    auto sq = fixtures::unit_square();
    std::vector<Point> cen{pt(Rational(1, 2), Rational(1, 2)), pt(Rational(1, 4), Rational(1, 4))};

    CandidateCaps strict;
    strict.max_int = 6;
    CHECK_THROWS_AS((void)steiner_candidates(sq, cen, strict), ResourceLimitError);

    CandidateCaps loose;
    loose.max_int = 6;
    loose.heuristic = true;
    auto cs = steiner_candidates(sq, cen, loose);
    CHECK(cs.capped);
    CHECK(cs.s_int.size() == 6);
    CHECK(holds(sq.pts, cs.s_int));  // corners survive
    CHECK(holds(cen, cs.s_int));     // centers survive
}

TEST_CASE("full pipeline on the L-shape respects the invariants") {
    auto P = fixtures::lshape();
    CandidateCaps caps;
    caps.max_cen = 30;
    caps.max_int = 500;
    caps.heuristic = true;
    auto cs = candidate_sets(P, {}, caps);
    check_chain_invariants(P, cs);
    CHECK(cs.s_cen.size() <= 30);
    CHECK(cs.s_int.size() <= 500);
}
