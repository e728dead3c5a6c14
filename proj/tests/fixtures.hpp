#pragma once

// Shared test fixtures. Coordinates are exact; anything derived from them in
// assertions was computed by hand or by the independent oracles in
// oracles.hpp before the implementation existed.

#include <vector>

#include "starpart/polygon.hpp"

namespace fixtures {

using starpart::Point;
using starpart::Polygon;
using starpart::Rational;

inline Point pt(long long x, long long y) { return {Rational(x), Rational(y)}; }
inline Point pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

// L-shape: unit kernel square at the origin, one concave corner at (1,1).
inline Polygon lshape() {
    return Polygon{{pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)}};
}

// Axis-aligned comb with k teeth of width 1 separated by unit gaps with
// floor y = 1; base strip [0, 2k-1] x [0,1]. n = 4k corners.
inline Polygon comb(int k) {
    std::vector<Point> pts;
    long long w = 2 * k - 1;
    pts.push_back(pt(0, 0));
    pts.push_back(pt(w, 0));
    pts.push_back(pt(w, 2));
    for (long long x = w - 1; x >= 1; x -= 2) {
        pts.push_back(pt(x, 2));
        pts.push_back(pt(x, 1));
        pts.push_back(pt(x - 1, 1));
        pts.push_back(pt(x - 1, 2));
    }
    pts.push_back(pt(0, 2));
    return Polygon{pts};
}

inline Polygon unit_square() {
    return Polygon{{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}};
}

// strictly convex 7-gon: rational points (1-t^2, 2t)/(1+t^2) on the unit
// circle for t = -3..3, listed CCW from the lex-min corner
inline Polygon convex_poly() {
    std::vector<starpart::Point> pts;
    for (int t = -3; t <= 3; t++) {
        starpart::Rational d(t * t + 1);
        pts.push_back({starpart::Rational(1 - t * t) / d, starpart::Rational(2 * t) / d});
    }
    return Polygon{pts};
}

inline Polygon rect(long long w, long long h) {
    return Polygon{{pt(0, 0), pt(w, 0), pt(w, h), pt(0, h)}};
}

inline Polygon hexagon() {
    return Polygon{{pt(-4, 0), pt(-2, -3), pt(2, -3), pt(4, 0), pt(2, 3), pt(-2, 3)}};
}

// staircase of three uneven steps; concave corners (5,2),(3,4),(2,6) at
// indices 3, 5, 7
inline Polygon staircase() {
    return Polygon{{pt(0, 0), pt(8, 0), pt(8, 2), pt(5, 2), pt(5, 4), pt(3, 4), pt(3, 6),
                    pt(2, 6), pt(2, 8), pt(0, 8)}};
}

// triangle with a dent in each edge; the dent tips (4,1),(5,3),(3,3) at
// indices 1, 3, 5 are concave and pairwise visible
inline Polygon dented_triangle() {
    return Polygon{{pt(0, 0), pt(4, 1), pt(8, 0), pt(5, 3), pt(4, 6), pt(3, 3)}};
}

// Square with a vertical incision from the top edge down to the middle;
// weakly simple: the wall (1,2)-(1,1) is traversed twice.
inline starpart::WeaklySimplePolygon slit_square() {
    return starpart::WeaklySimplePolygon{
        {pt(0, 0), pt(2, 0), pt(2, 2), pt(1, 2), pt(1, 1), pt(1, 2), pt(0, 2)}};
}

// 15-gon with three concave notches (indices 3, 8, 13) arranged like a
// pinwheel around the middle plus one extra concave flap corner (index 11).
// The notch edges at each of 3/8/13 fall on one common side of legs aimed
// near (1/3, 1/3); every triple involving 11 fails the side test. Kernel is
// empty, so at least two pieces are needed.
inline Polygon pinwheel() {
    return Polygon{{pt(-1, -4), pt(3, -4), pt(3, -2), pt(2, 0),
                    pt(Rational(5, 2), Rational(-1, 2)), pt(4, 1), pt(4, Rational(5, 2)),
                    pt(1, Rational(5, 2)), pt(-1, 2), pt(Rational(-1, 2), Rational(9, 4)),
                    pt(-4, 1), pt(Rational(-7, 4), -1), pt(Rational(-7, 4), Rational(-3, 2)),
                    pt(-1, -2), pt(-2, Rational(-9, 4))}};
}

// Hexagonal three-pointed star: concave dents at indices 1, 3, 5 face a
// common middle, but at every dent the incident edges straddle any leg
// pointed there, so no support triple is valid despite the pseudo-triangle
// existing.
inline Polygon threestar() {
    return Polygon{{pt(4, -7), pt(2, 0), pt(4, 7), pt(Rational(-6, 5), Rational(8, 5)),
                    pt(-8, 0), pt(Rational(-6, 5), Rational(-8, 5))}};
}

}  // namespace fixtures
