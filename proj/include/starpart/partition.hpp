#pragma once

#include <array>
#include <string>
#include <vector>

#include "starpart/polygon.hpp"

namespace starpart {

// two star centers A1, A2 and three concave corners D1, D2, D3 meeting in a
// common point C with three strictly convex angles; the legs D_i C lie in P
struct FakeTripod {
    std::array<std::size_t, 3> supports;  // concave corner indices into P
    std::array<Point, 2> child_centers;   // A1, A2
    Point point;                          // C
    std::array<Segment, 3> legs;          // D_i -> C
    std::size_t parent_side = 0;          // subpolygon the tripod is oriented toward
};

struct StarPiece {
    WeaklySimplePolygon boundary;  // CCW walk, incisions allowed
    Point center;
};

struct PartitionMeta {
    std::string method;      // which construction produced it
    std::string candidates;  // provenance of the candidate sets, if any
};

struct Partition {
    std::vector<StarPiece> pieces;
    PartitionMeta meta;

    std::size_t size() const { return pieces.size(); }
};

inline Rational partition_area(const Partition& part) {
    Rational s = 0;
    for (const StarPiece& p : part.pieces) s += signed_area(p.boundary.pts);
    return s;
}

}  // namespace starpart
