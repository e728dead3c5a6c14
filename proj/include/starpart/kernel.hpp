#pragma once

#include <optional>
#include <vector>

#include "starpart/polygon.hpp"
#include "starpart/visibility.hpp"

namespace starpart {

// side=+1 selects eval >= 0 (resp. > 0), side=-1 the other one
struct HalfPlane {
    Line line;
    int side = 1;

    bool contains(const Point& p) const { return side * sign(line.eval(p)) >= 0; }
    bool contains_open(const Point& p) const { return side * sign(line.eval(p)) > 0; }
};

// region to the left of the directed edge a->b
inline HalfPlane inner_half_plane(const Point& a, const Point& b) {
    Line l = Line::through(a, b);
    // pick the sign so that a point to the left evaluates positively
    Point probe{a.x - (b.y - a.y), a.y + (b.x - a.x)};
    return {l, sign(l.eval(probe))};
}

// convex, possibly degenerate: 0 points = empty, 1 = point, 2 = segment,
// >= 3 = CCW polygon with no straight corners, rotated so boundary[0] is lex-min
struct ConvexRegion {
    enum class Kind { Empty, Point, Segment, Polygon };

    std::vector<starpart::Point> boundary;

    Kind kind() const {
        switch (boundary.size()) {
            case 0: return Kind::Empty;
            case 1: return Kind::Point;
            case 2: return Kind::Segment;
            default: return Kind::Polygon;
        }
    }
    bool empty() const { return boundary.empty(); }

    bool contains(const starpart::Point& p) const {
        switch (kind()) {
            case Kind::Empty: return false;
            case Kind::Point: return boundary[0] == p;
            case Kind::Segment: return on_segment(p, {boundary[0], boundary[1]});
            default: break;
        }
        for (std::size_t i = 0; i < boundary.size(); i++) {
            const Point& a = boundary[i];
            const Point& b = boundary[(i + 1) % boundary.size()];
            if (orient_sign(a, b, p) < 0) return false;
        }
        return true;
    }
};

namespace detail {

inline ConvexRegion normalize_region(std::vector<Point> pts) {
    // collapse consecutive duplicates, cyclically
    std::vector<Point> out;
    for (const Point& p : pts)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();

    if (out.size() >= 3) {
        bool flat = true;
        for (std::size_t i = 2; i < out.size() && flat; i++)
            flat = orient_sign(out[0], out[1], out[i]) == 0;
        if (flat) {
            // lex order agrees with the order along any line
            Point lo = out[0], hi = out[0];
            for (const Point& p : out) {
                if (lex_less(p, lo)) lo = p;
                if (lex_less(hi, p)) hi = p;
            }
            if (lo == hi) return {{lo}};
            return {{lo, hi}};
        }
        // drop straight corners
        std::vector<Point> slim;
        for (std::size_t i = 0; i < out.size(); i++) {
            const Point& prev = out[(i + out.size() - 1) % out.size()];
            const Point& next = out[(i + 1) % out.size()];
            if (orient_sign(prev, out[i], next) != 0) slim.push_back(out[i]);
        }
        out = std::move(slim);
    }
    if (out.size() == 2 && out[0] == out[1]) out.pop_back();
    if (out.size() >= 3) {
        std::size_t lo = 0;
        for (std::size_t i = 1; i < out.size(); i++)
            if (lex_less(out[i], out[lo])) lo = i;
        std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(lo), out.end());
    } else if (out.size() == 2 && lex_less(out[1], out[0])) {
        std::swap(out[0], out[1]);
    }
    return {std::move(out)};
}

}  // namespace detail

// closed clip
inline ConvexRegion clip(const ConvexRegion& r, const HalfPlane& h) {
    auto ev = [&](const Point& p) { return h.side * sign(h.line.eval(p)); };
    switch (r.kind()) {
        case ConvexRegion::Kind::Empty:
            return r;
        case ConvexRegion::Kind::Point:
            return ev(r.boundary[0]) >= 0 ? r : ConvexRegion{};
        case ConvexRegion::Kind::Segment: {
            Point a = r.boundary[0], b = r.boundary[1];
            int da = ev(a), db = ev(b);
            if (da < 0 && db < 0) return {};
            if (da >= 0 && db >= 0) return r;
            auto x = line_intersection(h.line, Line::through(a, b));
            Point cut = *x;
            if (da < 0) a = cut;
            else b = cut;
            return detail::normalize_region({a, b});
        }
        default:
            break;
    }
    std::vector<Point> out;
    std::size_t m = r.boundary.size();
    for (std::size_t i = 0; i < m; i++) {
        const Point& p = r.boundary[i];
        const Point& q = r.boundary[(i + 1) % m];
        int dp = ev(p), dq = ev(q);
        if (dp >= 0) out.push_back(p);
        if ((dp > 0 && dq < 0) || (dp < 0 && dq > 0)) {
            auto x = line_intersection(h.line, Line::through(p, q));
            out.push_back(*x);
        }
    }
    return detail::normalize_region(std::move(out));
}

// all star centers of the region bounded by the walk: the intersection of the
// inner half-planes of its edges (doubled incision edges pin the kernel to
// their line, which is exactly right)
inline ConvexRegion kernel_of_walk(const std::vector<Point>& walk) {
    BBox box = bounding_box(walk);
    ConvexRegion r{{Point{box.xmin - 1, box.ymin - 1},
                    Point{box.xmax + 1, box.ymin - 1},
                    Point{box.xmax + 1, box.ymax + 1},
                    Point{box.xmin - 1, box.ymax + 1}}};
    for (std::size_t i = 0; i < walk.size() && !r.empty(); i++) {
        const Point& a = walk[i];
        const Point& b = walk[(i + 1) % walk.size()];
        if (a == b) continue;
        r = clip(r, inner_half_plane(a, b));
    }
    return r;
}

inline ConvexRegion kernel(const Polygon& P) { return kernel_of_walk(P.pts); }
inline ConvexRegion kernel(const WeaklySimplePolygon& P) { return kernel_of_walk(P.pts); }

// witness star center: lex-smallest kernel corner
inline std::optional<Point> is_star_shaped(const Polygon& P) {
    ConvexRegion k = kernel(P);
    if (k.empty()) return std::nullopt;
    Point best = k.boundary[0];
    for (const Point& p : k.boundary)
        if (lex_less(p, best)) best = p;
    return best;
}

// Removes one connected component C of Q ∩ H, selected by a point of it.
// A must be a star center of Q outside H; the hole C leaves behind is sealed
// with a straight chord on the bounding line. A selector that hits no
// component trims nothing.
inline WeaklySimplePolygon trim_component(const WeaklySimplePolygon& Q, const Point& A,
                                          const HalfPlane& H, const Point& selector) {
    // cut the walk wherever an edge crosses the bounding line
    std::vector<Point> walk;
    std::size_t n = Q.size();
    for (std::size_t i = 0; i < n; i++) {
        const Point& a = Q.corner(i);
        const Point& b = Q.corner((i + 1) % n);
        walk.push_back(a);
        int da = sign(H.line.eval(a)), db = sign(H.line.eval(b));
        if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
            auto x = line_intersection(H.line, Line::through(a, b));
            walk.push_back(*x);
        }
    }

    // maximal runs of edges strictly inside the open half-plane; each run is
    // the boundary arc of one component of Q ∩ H, and its two endpoints lie
    // on the bounding line
    std::size_t m = walk.size();
    auto edge_inside = [&](std::size_t i) {
        const Point& a = walk[i];
        const Point& b = walk[(i + 1) % m];
        if (a == b) return false;
        Point mid = Segment{a, b}.midpoint();
        return H.contains_open(mid);
    };

    std::size_t start = m;  // some edge not inside, as a run delimiter
    for (std::size_t i = 0; i < m; i++)
        if (!edge_inside(i)) {
            start = i;
            break;
        }
    if (start == m) throw GeomError("trim_component: component contains the star center");

    for (std::size_t off = 0; off < m; off++) {
        std::size_t i = (start + off) % m;
        if (!edge_inside(i)) continue;
        std::size_t j = i;  // run [i, j] of inside edges
        while (edge_inside((j + 1) % m)) j = (j + 1) % m;

        // component polygon: arc walk[i..j+1] closed by the chord back to walk[i]
        std::vector<Point> comp;
        for (std::size_t k = i;; k = (k + 1) % m) {
            comp.push_back(walk[k]);
            if (k == (j + 1) % m) break;
        }
        bool hit = H.contains_open(selector) && region_contains(comp, selector) != Location::Exterior;
        if (!hit) {
            off += (j + m - i) % m;
            continue;
        }
        if (H.contains_open(A) && region_contains(comp, A) != Location::Exterior)
            throw GeomError("trim_component: component contains the star center");

        std::vector<Point> rest;
        for (std::size_t k = (j + 1) % m;; k = (k + 1) % m) {
            rest.push_back(walk[k]);
            if (k == i) break;
        }
        // drop corners made straight by the seal, but keep weak simplicity intact
        std::vector<Point> slim;
        std::size_t r = rest.size();
        for (std::size_t k = 0; k < r; k++) {
            const Point& prev = rest[(k + r - 1) % r];
            const Point& next = rest[(k + 1) % r];
            if (rest[k] == next) continue;
            if (orient_sign(prev, rest[k], next) == 0 && dot(prev - rest[k], next - rest[k]) < 0)
                continue;
            slim.push_back(rest[k]);
        }
        return WeaklySimplePolygon{std::move(slim)};
    }
    return Q;  // selector hit no component
}

}  // namespace starpart
