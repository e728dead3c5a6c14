#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "starpart/fisk.hpp"
#include "starpart/gen.hpp"
#include "starpart/oracle.hpp"
#include "starpart/verify.hpp"

using namespace starpart;
using fixtures::pt;

namespace {

bool has_rule(const Report& rep, const std::string& rule) {
    for (const Violation& v : rep.violations)
        if (v.rule == rule) return true;
    return false;
}

Partition make_part(std::vector<std::pair<std::vector<Point>, Point>> pieces) {
    Partition part;
    for (auto& [walk, c] : pieces)
        part.pieces.push_back({WeaklySimplePolygon{std::move(walk)}, c});
    return part;
}

Rational walk_area(const std::vector<Point>& w) { return signed_area(w); }

}  // namespace

TEST_CASE("visibility polygon from a kernel point is the whole region") {
    Polygon hex = fixtures::hexagon();
    CHECK(visibility_polygon(hex.pts, pt(0, 0)) == hex.pts);
    Polygon L = fixtures::lshape();
    CHECK(visibility_polygon(L.pts, pt(1, 1)) == L.pts);
    Polygon sq = fixtures::unit_square();
    CHECK(visibility_polygon(sq.pts, pt(Rational(1, 2), Rational(1, 2))) == sq.pts);
    CHECK_THROWS_AS(visibility_polygon(L.pts, pt(Rational(3, 2), Rational(3, 2))), GeomError);
}

TEST_CASE("visibility polygon clips at a reflex corner") {
    Polygon L = fixtures::lshape();
    Point c = pt(Rational(3, 2), Rational(1, 2));
    std::vector<Point> want{pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(0, 2)};
    CHECK(visibility_polygon(L.pts, c) == want);

    VisibilitySplit split = visibility_split(L.pts, c);
    CHECK(split.visible == want);
    REQUIRE(split.pockets.size() == 1);
    CHECK(split.pockets[0] == std::vector<Point>{pt(0, 2), pt(1, 1), pt(1, 2)});
}

TEST_CASE("visibility polygon from a corner viewpoint") {
    Polygon L = fixtures::lshape();
    std::vector<Point> want{pt(0, 0), pt(2, 0), pt(2, 1), pt(0, 1)};
    CHECK(visibility_polygon(L.pts, pt(2, 1)) == want);
}

TEST_CASE("boundary viewpoint sees the whole square") {
    Polygon sq = fixtures::rect(4, 4);
    CHECK(visibility_polygon(sq.pts, pt(2, 0)) == sq.pts);
}

TEST_CASE("comb visibility from the first mouth hides the far teeth") {
    Polygon P = fixtures::comb(3);
    Point c = pt(Rational(1, 2), Rational(1));
    std::vector<Point> slab{pt(0, 0), pt(5, 0), pt(5, 1), pt(1, 1), pt(1, 2), pt(0, 2)};
    VisibilitySplit split = visibility_split(P.pts, c);
    CHECK(split.visible == slab);
    REQUIRE(split.pockets.size() == 2);
    CHECK(split.pockets[0] == std::vector<Point>{pt(4, 1), pt(5, 1), pt(5, 2), pt(4, 2)});
    CHECK(split.pockets[1] == std::vector<Point>{pt(2, 1), pt(3, 1), pt(3, 2), pt(2, 2)});
}

TEST_CASE("slit square visibility stops at the incision") {
    std::vector<Point> slit = fixtures::slit_square().pts;
    Point c = pt(Rational(1, 2), Rational(1));
    VisibilitySplit split = visibility_split(slit, c);
    CHECK(split.visible ==
          std::vector<Point>{pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)});
    REQUIRE(split.pockets.size() == 1);
    CHECK(split.pockets[0] == std::vector<Point>{pt(1, 1), pt(2, 1), pt(2, 2), pt(1, 2)});
}

TEST_CASE("visible region and pockets tile the region exactly") {
    std::vector<std::pair<std::vector<Point>, Point>> cases{
        {fixtures::lshape().pts, pt(Rational(3, 2), Rational(1, 2))},
        {fixtures::comb(3).pts, pt(Rational(1, 2), Rational(1))},
        {fixtures::comb(4).pts, pt(Rational(5, 2), Rational(1))},
        {fixtures::staircase().pts, pt(1, 1)},
        {fixtures::dented_triangle().pts, pt(4, 2)},
        {fixtures::hexagon().pts, pt(-2, 0)},
        {fixtures::slit_square().pts, pt(Rational(1, 2), Rational(1))},
    };
    for (const auto& [region, c] : cases) {
        CAPTURE(c.x);
        CAPTURE(c.y);
        VisibilitySplit split = visibility_split(region, c);
        REQUIRE(!split.visible.empty());
        CHECK(!find_proper_self_crossing(split.visible));
        Rational total = walk_area(split.visible);
        for (const auto& p : split.pockets) {
            CHECK(!find_self_intersection(p));
            CHECK(walk_area(p) > 0);
            total += walk_area(p);
        }
        CHECK(total == walk_area(region));
        for (const Point& q : split.visible) CHECK(sees(region, c, q));
    }
}

TEST_CASE("fan partitions of the fixtures verify cleanly") {
    for (const Polygon& P :
         {fixtures::lshape(), fixtures::comb(2), fixtures::comb(3), fixtures::staircase(),
          fixtures::dented_triangle(), fixtures::hexagon(), fixtures::convex_poly()}) {
        Partition part = avis_toussaint(P);
        Report rep = verify_partition(P, part);
        CHECK(rep.ok);
        CHECK(rep.violations.empty());
        CHECK(part.size() <= P.size() / 3);
    }
}

TEST_CASE("hand-made two-triangle partition verifies") {
    Polygon sq = fixtures::unit_square();
    Partition part = make_part({
        {{pt(0, 0), pt(1, 0), pt(1, 1)}, pt(Rational(1, 2), Rational(1, 4))},
        {{pt(0, 0), pt(1, 1), pt(0, 1)}, pt(Rational(1, 4), Rational(3, 4))},
    });
    CHECK(verify_partition(sq, part).ok);
}

TEST_CASE("verifier flags an exiled center") {
    Polygon sq = fixtures::unit_square();
    Partition part = make_part({
        {{pt(0, 0), pt(1, 0), pt(1, 1)}, pt(Rational(3, 4), Rational(1, 4))},
        {{pt(0, 0), pt(1, 1), pt(0, 1)}, pt(Rational(3, 4), Rational(1, 4))},
    });
    Report rep = verify_partition(sq, part);
    CHECK(!rep.ok);
    CHECK(has_rule(rep, "center-outside"));
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].piece == 1);
}

TEST_CASE("verifier flags overlapping pieces through the area identity") {
    Polygon sq = fixtures::unit_square();
    Partition part = make_part({
        {sq.pts, pt(Rational(1, 2), Rational(1, 2))},
        {{pt(0, 0), pt(1, 0), pt(1, 1)}, pt(Rational(3, 4), Rational(1, 4))},
    });
    Report rep = verify_partition(sq, part);
    CHECK(!rep.ok);
    CHECK(has_rule(rep, "area"));
}

TEST_CASE("verifier flags a coverage gap") {
    Polygon sq = fixtures::unit_square();
    Partition part = make_part({
        {{pt(0, 0), pt(1, 0), pt(1, 1)}, pt(Rational(3, 4), Rational(1, 4))},
    });
    Report rep = verify_partition(sq, part);
    CHECK(!rep.ok);
    CHECK(has_rule(rep, "area"));
}

TEST_CASE("verifier flags transversally crossing pieces") {
    Polygon sq = fixtures::unit_square();
    Partition part = make_part({
        {{pt(0, 0), pt(1, 0), pt(1, 1)}, pt(Rational(1, 2), Rational(1, 4))},
        {{pt(1, 0), pt(1, 1), pt(0, 1)}, pt(Rational(2, 3), Rational(2, 3))},
    });
    Report rep = verify_partition(sq, part);
    CHECK(!rep.ok);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].rule == "crossing");
    CHECK(rep.violations[0].witness.a == pt(Rational(1, 2), Rational(1, 2)));
}

TEST_CASE("verifier flags a non-star piece") {
    Polygon L = fixtures::lshape();
    Partition part = make_part({{L.pts, pt(2, 1)}});
    Report rep = verify_partition(L, part);
    CHECK(!rep.ok);
    CHECK(has_rule(rep, "not-star"));
    CHECK(!has_rule(rep, "area"));
    CHECK(!has_rule(rep, "containment"));
}

TEST_CASE("verifier flags a piece leaking outside the polygon") {
    Polygon L = fixtures::lshape();
    Partition part = make_part({{{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}, pt(1, 1)}});
    Report rep = verify_partition(L, part);
    CHECK(!rep.ok);
    CHECK(has_rule(rep, "containment"));
    CHECK(has_rule(rep, "area"));
}

TEST_CASE("tripod extraction on a fan partition finds one face and no tripods") {
    Polygon L = fixtures::lshape();
    Partition part = avis_toussaint(L);
    TripodTree tree = extract_tripod_tree(L, part);
    CHECK(tree.faces.size() == 1);
    CHECK(tree.tripods.empty());
    CHECK(tree.edges.empty());
    CHECK(tree.root == 0);
    CHECK(tree.faces[0].size() == part.size());
}

TEST_CASE("a central tripod in a square yields the three-leg star graph") {
    Polygon sq{{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}};
    Partition part = make_part({
        {{pt(0, 0), pt(2, 0), pt(1, 1)}, pt(1, Rational(1, 2))},
        {{pt(2, 0), pt(2, 2), pt(1, 2), pt(1, 1)}, pt(Rational(3, 2), Rational(1))},
        {{pt(1, 2), pt(0, 2), pt(0, 0), pt(1, 1)}, pt(Rational(1, 2), Rational(1))},
    });
    REQUIRE(verify_partition(sq, part).ok);
    TripodTree tree = extract_tripod_tree(sq, part);
    CHECK(tree.faces.size() == 3);
    REQUIRE(tree.tripods.size() == 1);
    CHECK(tree.edges.size() == 3);
    CHECK(tree.root == 0);
    const TripodTree::Tripod& t = tree.tripods[0];
    CHECK(t.at == pt(1, 1));
    CHECK(t.pieces == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(t.parent_face == tree.root);
    for (const Segment& leg : t.legs) CHECK(leg.a == pt(1, 1));
    CHECK(t.legs[0].b == pt(1, 2));
    CHECK(t.legs[1].b == pt(0, 0));
    CHECK(t.legs[2].b == pt(2, 0));
}

TEST_CASE("two tripods sharing a leg form a cycle and are rejected") {
    Polygon sq = fixtures::rect(4, 2);
    Partition part = make_part({
        {{pt(0, 0), pt(1, 1), pt(0, 2)}, pt(Rational(1, 4), Rational(1))},
        {{pt(1, 1), pt(3, 1), pt(4, 2), pt(0, 2)}, pt(2, Rational(3, 2))},
        {{pt(0, 0), pt(4, 0), pt(3, 1), pt(1, 1)}, pt(2, Rational(1, 2))},
        {{pt(4, 0), pt(4, 2), pt(3, 1)}, pt(Rational(11, 3), Rational(1))},
    });
    REQUIRE(verify_partition(sq, part).ok);
    CHECK_THROWS_AS(extract_tripod_tree(sq, part), GeomError);
}

TEST_CASE("four pieces meeting at an interior point are reported, not classified") {
    Polygon sq{{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)}};
    Partition part = make_part({
        {{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, pt(Rational(1, 2), Rational(1, 2))},
        {{pt(1, 0), pt(2, 0), pt(2, 1), pt(1, 1)}, pt(Rational(3, 2), Rational(1, 2))},
        {{pt(1, 1), pt(2, 1), pt(2, 2), pt(1, 2)}, pt(Rational(3, 2), Rational(3, 2))},
        {{pt(0, 1), pt(1, 1), pt(1, 2), pt(0, 2)}, pt(Rational(1, 2), Rational(3, 2))},
    });
    REQUIRE(verify_partition(sq, part).ok);
    CHECK_THROWS_AS(extract_tripod_tree(sq, part), GeomError);
}

TEST_CASE("peeling oracle: convex and kernel-covered regions need one piece") {
    Polygon hex = fixtures::hexagon();
    Partition cert;
    auto k = brute_force_min_partition(hex, {pt(0, 0)}, {}, {}, 4, &cert);
    REQUIRE(k.has_value());
    CHECK(*k == 1);
    REQUIRE(cert.size() == 1);
    CHECK(cert.pieces[0].boundary.pts == hex.pts);
    CHECK(verify_partition(hex, cert).ok);

    Polygon L = fixtures::lshape();
    CHECK(brute_force_min_partition(L, {pt(Rational(1, 2), Rational(1, 2))}, {}, {}, 4) == 1);

    Polygon r = fixtures::rect(2, 1);
    std::vector<Point> two{pt(Rational(1, 2), Rational(1, 2)), pt(Rational(3, 2), Rational(1, 2))};
    CHECK(brute_force_min_partition(r, two, {}, {}, 4) == 1);
}

TEST_CASE("peeling oracle: splitting the L-shape through its window") {
    Polygon L = fixtures::lshape();
    std::vector<Point> cen{pt(Rational(3, 2), Rational(1, 2)), pt(Rational(1, 2), Rational(3, 2))};
    Partition cert;
    auto k = brute_force_min_partition(L, cen, {}, {pt(1, 1)}, 4, &cert);
    REQUIRE(k.has_value());
    CHECK(*k == 2);
    REQUIRE(cert.size() == 2);
    CHECK(cert.pieces[0].boundary.pts ==
          std::vector<Point>{pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(0, 2)});
    CHECK(cert.pieces[1].boundary.pts == std::vector<Point>{pt(0, 2), pt(1, 1), pt(1, 2)});
    CHECK(verify_partition(L, cert).ok);
}

TEST_CASE("peeling oracle: the comb needs one center per tooth") {
    Polygon P = fixtures::comb(3);
    std::vector<Point> cen{pt(Rational(1, 2), Rational(1)), pt(Rational(5, 2), Rational(1)),
                           pt(Rational(9, 2), Rational(1))};
    std::vector<Point> probes{pt(Rational(3, 2), Rational(1, 2)), pt(5, 2), pt(0, 0)};
    Partition cert;
    auto k = brute_force_min_partition(P, cen, {}, probes, 3, &cert);
    REQUIRE(k.has_value());
    CHECK(*k == 3);
    REQUIRE(cert.size() == 3);
    CHECK(cert.pieces[0].boundary.pts ==
          std::vector<Point>{pt(0, 0), pt(5, 0), pt(5, 1), pt(1, 1), pt(1, 2), pt(0, 2)});
    CHECK(verify_partition(P, cert).ok);

    CHECK(brute_force_min_partition(P, cen, {}, {}, 2) == std::nullopt);
}

TEST_CASE("peeling oracle rejects blocked center placements") {
    Polygon P = fixtures::comb(3);
    std::vector<Point> tops{pt(Rational(1, 2), Rational(3, 2)), pt(Rational(5, 2), Rational(3, 2)),
                            pt(Rational(9, 2), Rational(3, 2))};
    // the gap floors hide points just under them from every tooth interior
    Point q = pt(Rational(3, 2), Rational(19, 20));
    for (const Point& c : tops) CHECK(!sees(P, c, q));
    CHECK(brute_force_min_partition(P, tops, {}, {}, 3) == std::nullopt);
}

TEST_CASE("peeling oracle enforces its resource guards") {
    Polygon sq = fixtures::unit_square();
    std::vector<Point> many;
    for (int i = 1; i <= 13; i++) many.push_back(pt(Rational(i, 14), Rational(1, 2)));
    CHECK_THROWS_AS(brute_force_min_partition(sq, many, {}, {}, 2), ResourceLimitError);
    CHECK_THROWS_AS(
        brute_force_min_partition(sq, {pt(Rational(1, 2), Rational(1, 2))}, {}, {}, 5),
        ResourceLimitError);
}

TEST_CASE("random polygons are simple, CCW, and fan-partitionable") {
    for (int i = 0; i < 100; i++) {
        std::size_t n = 6 + static_cast<std::size_t>(i % 25);
        CAPTURE(i);
        Polygon P = gen_random_polygon(n, 0xC0FFEEULL + static_cast<std::uint64_t>(i));
        REQUIRE(P.size() == n);
        CHECK(is_ccw(P.pts));
        CHECK(!find_self_intersection(P.pts));
        Partition part = avis_toussaint(P);
        Report rep = verify_partition(P, part);
        CHECK(rep.ok);
        CHECK(part.size() <= n / 3);
    }
}

TEST_CASE("generator families are deterministic and match the fixtures") {
    CHECK(gen_random_polygon(12, 7).pts == gen_random_polygon(12, 7).pts);
    CHECK(gen_comb(3).pts == fixtures::comb(3).pts);
    CHECK(gen_lshape().pts == fixtures::lshape().pts);
    Polygon cv = gen_convex(9);
    CHECK(cv.size() == 9);
    CHECK(is_ccw(cv.pts));
    for (std::size_t i = 0; i < cv.size(); i++)
        CHECK(classify_corner(cv, i) == CornerKind::Convex);
}
