#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "starpart/rational.hpp"

namespace starpart {

struct GeomError : std::runtime_error {
    explicit GeomError(const std::string& what) : std::runtime_error(what) {}
};

struct Point {
    Rational x, y;

    Point() : x(0), y(0) {}
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(const Rational& s) const { return {x * s, y * s}; }
};

// Lexicographic x-then-y order; the deterministic tie-breaker everywhere.
inline bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

struct LexLess {
    bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

inline std::size_t hash_point(const Point& p) {
    std::size_t h = hash_rational(p.x);
    hash_mix(h, hash_rational(p.y));
    return h;
}

struct PointHash {
    std::size_t operator()(const Point& p) const { return hash_point(p); }
};

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
    int s = sign(cross(q - p, r - p));
    return static_cast<Orientation>(s);
}

inline int orient_sign(const Point& p, const Point& q, const Point& r) {
    return sign(cross(q - p, r - p));
}

struct Segment {
    Point a, b;

    Segment() = default;
    Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {}
    bool degenerate() const { return a == b; }
    Point midpoint() const { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }
};

// Closed containment test; collinearity is required, not assumed.
inline bool on_segment(const Point& p, const Segment& s) {
    if (orient_sign(s.a, s.b, p) != 0) return false;
    if (s.a.x != s.b.x)
        return (p.x >= s.a.x && p.x <= s.b.x) || (p.x >= s.b.x && p.x <= s.a.x);
    return (p.y >= s.a.y && p.y <= s.b.y) || (p.y >= s.b.y && p.y <= s.a.y);
}

inline bool strictly_inside_segment(const Point& p, const Segment& s) {
    return on_segment(p, s) && p != s.a && p != s.b;
}

// Infinite line a*x + b*y + c = 0 in canonical integer-coprime form so that
// equal lines compare and hash equal.
struct Line {
    BigInt a, b, c;

    Line() : a(0), b(0), c(0) {}

    static Line through(const Point& p, const Point& q) {
        if (p == q) throw GeomError("line through identical points");
        Rational ra = q.y - p.y;
        Rational rb = p.x - q.x;
        Rational rc = -(ra * p.x + rb * p.y);
        return canonical(ra, rb, rc);
    }

    static Line canonical(const Rational& ra, const Rational& rb, const Rational& rc) {
        BigInt da = rat_den(ra), db = rat_den(rb), dc = rat_den(rc);
        BigInt m = lcm(lcm(da, db), dc);
        BigInt ia = rat_num(ra) * (m / da);
        BigInt ib = rat_num(rb) * (m / db);
        BigInt ic = rat_num(rc) * (m / dc);
        BigInt g = gcd(gcd(abs(ia), abs(ib)), abs(ic));
        if (g != 0) { ia /= g; ib /= g; ic /= g; }
        if (ia < 0 || (ia == 0 && ib < 0)) { ia = -ia; ib = -ib; ic = -ic; }
        Line l;
        l.a = ia; l.b = ib; l.c = ic;
        return l;
    }

    Rational eval(const Point& p) const {
        return Rational(a) * p.x + Rational(b) * p.y + Rational(c);
    }

    bool contains(const Point& p) const { return eval(p) == 0; }

    bool operator==(const Line& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const Line& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

inline bool parallel(const Line& l1, const Line& l2) {
    return l1.a * l2.b - l1.b * l2.a == 0;
}

inline std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
    BigInt det = l1.a * l2.b - l1.b * l2.a;
    if (det == 0) return std::nullopt;
    Rational x(l1.b * l2.c - l2.b * l1.c, det);
    Rational y(l2.a * l1.c - l1.a * l2.c, det);
    return Point{x, y};
}

// Intersection of two segments, classified. Overlap covers collinear segments
// sharing more than one point.
struct SegmentIntersection {
    enum class Kind { None, Point, Overlap } kind = Kind::None;
    Point p;        // Kind::Point
    Segment range;  // Kind::Overlap, oriented along s1
};

inline SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
    SegmentIntersection out;
    Point d1 = s1.b - s1.a, d2 = s2.b - s2.a;
    Rational denom = cross(d1, d2);
    if (denom != 0) {
        Rational t = cross(s2.a - s1.a, d2) / denom;
        Rational u = cross(s2.a - s1.a, d1) / denom;
        if (t < 0 || t > 1 || u < 0 || u > 1) return out;
        out.kind = SegmentIntersection::Kind::Point;
        out.p = Point{s1.a.x + d1.x * t, s1.a.y + d1.y * t};
        return out;
    }
    if (s1.degenerate() || s2.degenerate()) {
        if (s1.degenerate() && s2.degenerate()) {
            if (s1.a == s2.a) { out.kind = SegmentIntersection::Kind::Point; out.p = s1.a; }
            return out;
        }
        const Segment& seg = s1.degenerate() ? s2 : s1;
        const Point& p = s1.degenerate() ? s1.a : s2.a;
        if (on_segment(p, seg)) { out.kind = SegmentIntersection::Kind::Point; out.p = p; }
        return out;
    }
    if (orient_sign(s1.a, s1.b, s2.a) != 0) return out;  // parallel, distinct lines
    // Collinear: project on the dominant axis of the joint direction.
    Point d = d1;
    auto param = [&](const Point& p) {
        return (abs(d.x) >= abs(d.y)) ? p.x : p.y;
    };
    Rational a1 = param(s1.a), b1 = param(s1.b);
    if (a1 > b1) std::swap(a1, b1);
    Rational a2 = param(s2.a), b2 = param(s2.b);
    if (a2 > b2) std::swap(a2, b2);
    Rational lo = a1 > a2 ? a1 : a2;
    Rational hi = b1 < b2 ? b1 : b2;
    if (lo > hi) return out;
    auto at = [&](const Rational& v) -> Point {
        if (abs(d.x) >= abs(d.y)) {
            Rational t = (v - s1.a.x) / d.x;
            return {v, s1.a.y + d.y * t};
        }
        Rational t = (v - s1.a.y) / d.y;
        return {s1.a.x + d.x * t, v};
    };
    if (lo == hi) {
        out.kind = SegmentIntersection::Kind::Point;
        out.p = at(lo);
        return out;
    }
    out.kind = SegmentIntersection::Kind::Overlap;
    out.range = Segment(at(lo), at(hi));
    return out;
}

// Transversal crossing: interiors meet in a single point. Collinear overlap
// and endpoint contact do not count.
inline bool properly_cross(const Segment& s1, const Segment& s2) {
    int d1 = orient_sign(s2.a, s2.b, s1.a);
    int d2 = orient_sign(s2.a, s2.b, s1.b);
    int d3 = orient_sign(s1.a, s1.b, s2.a);
    int d4 = orient_sign(s1.a, s1.b, s2.b);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

// Clockwise angular order around an origin: compares the angle swept from
// direction `base` clockwise to `u` versus to `v`, range [0, 2pi).
inline int cmp_cw_angle_from(const Point& base, const Point& u, const Point& v) {
    auto half = [&](const Point& w) {
        // 0 while sweeping the first half-turn clockwise from base.
        Rational cr = cross(base, w);
        if (cr < 0) return 0;
        if (cr > 0) return 1;
        return dot(base, w) > 0 ? 0 : 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv ? -1 : 1;
    Rational cr = cross(u, v);
    if (cr < 0) return -1;  // v is further clockwise
    if (cr > 0) return 1;
    return 0;
}

// Counterclockwise angular comparator for directions (full turn, starting at
// positive x-axis); used to sort rays around a point deterministically.
inline bool ccw_dir_less(const Point& u, const Point& v) {
    auto half = [](const Point& w) { return (w.y < 0 || (w.y == 0 && w.x < 0)) ? 1 : 0; };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    Rational cr = cross(u, v);
    if (cr != 0) return cr > 0;
    return false;
}

}  // namespace starpart
