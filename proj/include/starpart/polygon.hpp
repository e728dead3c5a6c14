#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starpart/geometry.hpp"

namespace starpart {

enum class Location { Interior, Boundary, Exterior };
enum class CornerKind { Convex, Straight, Concave };

// Simple polygon, counterclockwise, positive area. normalize_polygon is the
// validating entry point; code taking a Polygon relies on these invariants.
struct Polygon {
    std::vector<Point> pts;

    std::size_t size() const { return pts.size(); }
    const Point& corner(std::size_t i) const { return pts[i % pts.size()]; }
    Segment edge(std::size_t i) const {
        return {pts[i % pts.size()], pts[(i + 1) % pts.size()]};
    }
};

// Closed boundary walk that may repeat points and run back over its own edges
// (incisions, spikes) but never properly crosses itself. Signed area >= 0.
struct WeaklySimplePolygon {
    std::vector<Point> pts;

    std::size_t size() const { return pts.size(); }
    const Point& corner(std::size_t i) const { return pts[i % pts.size()]; }
    Segment edge(std::size_t i) const {
        return {pts[i % pts.size()], pts[(i + 1) % pts.size()]};
    }

    static WeaklySimplePolygon from(const Polygon& p) { return {p.pts}; }
};

inline Rational signed_area(const std::vector<Point>& pts) {
    Rational acc = 0;
    std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; i++) acc += cross(pts[i], pts[(i + 1) % n]);
    return acc / 2;
}

inline Rational polygon_area(const Polygon& p) { return signed_area(p.pts); }

inline bool is_ccw(const std::vector<Point>& pts) { return signed_area(pts) > 0; }

// First pair of edges violating simplicity, if any. Adjacent edges may meet
// only at their shared corner; all other contact is a violation.
inline std::optional<std::pair<std::size_t, std::size_t>>
find_self_intersection(const std::vector<Point>& pts) {
    std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; i++) {
        Segment ei{pts[i], pts[(i + 1) % n]};
        if (ei.degenerate()) return std::make_pair(i, i);
        for (std::size_t j = i + 1; j < n; j++) {
            Segment ej{pts[j], pts[(j + 1) % n]};
            auto inter = segment_intersection(ei, ej);
            if (inter.kind == SegmentIntersection::Kind::None) continue;
            bool succ = (j == i + 1);
            bool wrap = (i == 0 && j == n - 1);
            if (succ || wrap) {
                const Point& shared = succ ? pts[j] : pts[0];
                if (inter.kind == SegmentIntersection::Kind::Point && inter.p == shared)
                    continue;
            }
            return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

// Weak-simplicity check: overlaps and touches are fine, transversal crossings
// are not.
inline std::optional<std::pair<std::size_t, std::size_t>>
find_proper_self_crossing(const std::vector<Point>& pts) {
    std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; i++) {
        Segment ei{pts[i], pts[(i + 1) % n]};
        for (std::size_t j = i + 1; j < n; j++) {
            Segment ej{pts[j], pts[(j + 1) % n]};
            if (properly_cross(ei, ej)) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

inline CornerKind classify_corner(const Polygon& p, std::size_t i) {
    std::size_t n = p.size();
    const Point& prev = p.pts[(i + n - 1) % n];
    const Point& cur = p.pts[i % n];
    const Point& next = p.pts[(i + 1) % n];
    switch (orientation(prev, cur, next)) {
        case Orientation::CounterClockwise: return CornerKind::Convex;
        case Orientation::Collinear: return CornerKind::Straight;
        default: return CornerKind::Concave;
    }
}

inline std::vector<std::size_t> concave_corners(const Polygon& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); i++)
        if (classify_corner(p, i) == CornerKind::Concave) out.push_back(i);
    return out;
}

struct NormalizeOptions {
    bool remove_straight = true;
};

struct NormalizeResult {
    Polygon polygon;
    bool reversed = false;
    std::size_t straight_removed = 0;
};

// Validates raw input corners into a Polygon: drops duplicate neighbors,
// flips clockwise input, strips straight corners (unless kept), rejects
// non-simple or empty shapes with a message naming the offending edges.
inline NormalizeResult normalize_polygon(std::vector<Point> pts,
                                         NormalizeOptions opts = {}) {
    NormalizeResult res;
    std::vector<Point> clean;
    for (const Point& p : pts) {
        if (!clean.empty() && clean.back() == p) continue;
        clean.push_back(p);
    }
    while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
    if (clean.size() < 3) throw GeomError("polygon needs at least 3 distinct corners");

    Rational area2 = signed_area(clean);
    if (area2 == 0) throw GeomError("polygon has zero area");
    if (area2 < 0) {
        std::reverse(clean.begin(), clean.end());
        res.reversed = true;
    }

    if (opts.remove_straight) {
        std::vector<Point> slim;
        std::size_t n = clean.size();
        for (std::size_t i = 0; i < n; i++) {
            const Point& prev = clean[(i + n - 1) % n];
            const Point& next = clean[(i + 1) % n];
            if (orient_sign(prev, clean[i], next) == 0) {
                res.straight_removed++;
                continue;
            }
            slim.push_back(clean[i]);
        }
        clean = std::move(slim);
        if (clean.size() < 3) throw GeomError("polygon degenerates after removing straight corners");
    }

    if (auto bad = find_self_intersection(clean)) {
        throw GeomError("polygon is not simple: edges " + std::to_string(bad->first) +
                        " and " + std::to_string(bad->second) + " intersect");
    }
    res.polygon.pts = std::move(clean);
    return res;
}

// Point location against a closed walk: explicit boundary scan, then ray
// parity. The half-open straddle rule keeps vertex and doubled-edge cases
// consistent; edges traversed twice cancel, which is exactly right for
// incisions.
inline Location region_contains(const std::vector<Point>& walk, const Point& p) {
    std::size_t n = walk.size();
    if (n == 0) return Location::Exterior;
    if (n == 1) return walk[0] == p ? Location::Boundary : Location::Exterior;
    for (std::size_t i = 0; i < n; i++) {
        Segment e{walk[i], walk[(i + 1) % n]};
        if (e.degenerate() ? (p == e.a) : on_segment(p, e)) return Location::Boundary;
    }
    bool inside = false;
    for (std::size_t i = 0; i < n; i++) {
        const Point& a = walk[i];
        const Point& b = walk[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            Rational xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xint > p.x) inside = !inside;
        }
    }
    return inside ? Location::Interior : Location::Exterior;
}

inline Location point_location(const Polygon& p, const Point& q) {
    return region_contains(p.pts, q);
}

inline Location point_location(const WeaklySimplePolygon& p, const Point& q) {
    return region_contains(p.pts, q);
}

// Position on a walk as (edge index, parameter in [0,1)); corners sit at
// t = 0 of their outgoing edge. Cyclic order of positions is boundary order.
struct BoundaryPos {
    std::size_t edge = 0;
    Rational t = 0;

    bool operator==(const BoundaryPos& o) const { return edge == o.edge && t == o.t; }
};

inline bool boundary_pos_less(const BoundaryPos& a, const BoundaryPos& b) {
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.t < b.t;
}

inline std::optional<BoundaryPos> boundary_position(const std::vector<Point>& walk,
                                                    const Point& p) {
    std::size_t n = walk.size();
    for (std::size_t i = 0; i < n; i++) {
        const Point& a = walk[i];
        const Point& b = walk[(i + 1) % n];
        if (p == a) return BoundaryPos{i, Rational(0)};
        if (a == b) continue;
        Segment e{a, b};
        if (!on_segment(p, e) || p == b) continue;
        Point d = b - a;
        Rational t = (abs(d.x) >= abs(d.y)) ? (p.x - a.x) / d.x : (p.y - a.y) / d.y;
        return BoundaryPos{i, t};
    }
    return std::nullopt;
}

inline Point point_at(const std::vector<Point>& walk, const BoundaryPos& pos) {
    const Point& a = walk[pos.edge % walk.size()];
    const Point& b = walk[(pos.edge + 1) % walk.size()];
    return {a.x + (b.x - a.x) * pos.t, a.y + (b.y - a.y) * pos.t};
}

struct BBox {
    Rational xmin, ymin, xmax, ymax;
};

inline BBox bounding_box(const std::vector<Point>& pts) {
    BBox b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const Point& p : pts) {
        if (p.x < b.xmin) b.xmin = p.x;
        if (p.y < b.ymin) b.ymin = p.y;
        if (p.x > b.xmax) b.xmax = p.x;
        if (p.y > b.ymax) b.ymax = p.y;
    }
    return b;
}

}  // namespace starpart
