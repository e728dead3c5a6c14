#pragma once

// Visibility predicates on polygon walks. Grazing contact (touching the
// boundary at points or sliding along an edge) never blocks; only transversal
// crossings do. All tests are exact: a candidate segment is cut at every
// boundary contact and each open piece is located by its midpoint.

#include <algorithm>
#include <optional>
#include <vector>

#include "starpart/polygon.hpp"

namespace starpart {

namespace detail {

// Parameters in [0,1] where the segment meets walk edges, plus 0 and 1.
inline std::vector<Rational> boundary_cuts(const std::vector<Point>& walk,
                                           const Segment& seg) {
    std::vector<Rational> ts{Rational(0), Rational(1)};
    Point d = seg.b - seg.a;
    Rational dd = dot(d, d);
    auto param = [&](const Point& p) { return dot(p - seg.a, d) / dd; };
    std::size_t n = walk.size();
    for (std::size_t i = 0; i < n; i++) {
        Segment e{walk[i], walk[(i + 1) % n]};
        auto inter = segment_intersection(seg, e);
        if (inter.kind == SegmentIntersection::Kind::Point) {
            ts.push_back(param(inter.p));
        } else if (inter.kind == SegmentIntersection::Kind::Overlap) {
            ts.push_back(param(inter.range.a));
            ts.push_back(param(inter.range.b));
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

}  // namespace detail

// True iff the whole closed segment lies in the region (boundary included).
inline bool segment_in_region(const std::vector<Point>& walk, const Segment& seg) {
    if (seg.degenerate()) return region_contains(walk, seg.a) != Location::Exterior;
    std::size_t n = walk.size();
    for (std::size_t i = 0; i < n; i++) {
        Segment e{walk[i], walk[(i + 1) % n]};
        if (properly_cross(seg, e)) return false;
    }
    auto ts = detail::boundary_cuts(walk, seg);
    Point d = seg.b - seg.a;
    for (std::size_t i = 0; i + 1 < ts.size(); i++) {
        Rational tm = (ts[i] + ts[i + 1]) / 2;
        Point m{seg.a.x + d.x * tm, seg.a.y + d.y * tm};
        if (region_contains(walk, m) == Location::Exterior) return false;
    }
    return true;
}

// Mutual visibility of x and y inside the region bounded by `walk`.
// Signals when either endpoint lies outside; use segment_in_region for the
// non-throwing form.
inline bool sees(const std::vector<Point>& walk, const Point& x, const Point& y) {
    if (region_contains(walk, x) == Location::Exterior)
        throw GeomError("sees: first point lies outside the region");
    if (region_contains(walk, y) == Location::Exterior)
        throw GeomError("sees: second point lies outside the region");
    return segment_in_region(walk, Segment{x, y});
}

inline bool sees(const Polygon& p, const Point& x, const Point& y) {
    return sees(p.pts, x, y);
}

inline bool sees(const WeaklySimplePolygon& p, const Point& x, const Point& y) {
    return sees(p.pts, x, y);
}

// x sees every point of seg, i.e. the (possibly degenerate) triangle spanned
// by x and seg lies in the region. Boundary contact allowed, intrusions not.
inline bool sees_segment(const std::vector<Point>& walk, const Point& x,
                         const Segment& seg) {
    if (!segment_in_region(walk, Segment{x, seg.a})) return false;
    if (!segment_in_region(walk, Segment{x, seg.b})) return false;
    if (!segment_in_region(walk, seg)) return false;
    int o = orient_sign(x, seg.a, seg.b);
    if (o == 0) return true;  // flat triangle, fully covered above
    const Point& pa = o > 0 ? seg.a : seg.b;
    const Point& pb = o > 0 ? seg.b : seg.a;
    auto strictly_inside = [&](const Point& q) {
        return orient_sign(x, pa, q) > 0 && orient_sign(pa, pb, q) > 0 &&
               orient_sign(pb, x, q) > 0;
    };
    // Any boundary edge with a piece strictly inside the open triangle blocks.
    std::size_t n = walk.size();
    Point tri[3] = {x, pa, pb};
    for (std::size_t i = 0; i < n; i++) {
        Segment e{walk[i], walk[(i + 1) % n]};
        if (e.degenerate()) {
            if (strictly_inside(e.a)) return false;
            continue;
        }
        // Clip e against the triangle: collect parameters of e inside it.
        Rational lo(0), hi(1);
        Point d = e.b - e.a;
        bool empty = false;
        for (int k = 0; k < 3 && !empty; k++) {
            const Point& u = tri[k];
            const Point& v = tri[(k + 1) % 3];
            // keep halfplane: orient_sign(u, v, p) >= 0
            Rational fa = cross(v - u, e.a - u);
            Rational fb = cross(v - u, e.b - u);
            if (fa < 0 && fb < 0) { empty = true; break; }
            if (fa >= 0 && fb >= 0) continue;
            Rational t = fa / (fa - fb);
            if (fa < 0) { if (t > lo) lo = t; }
            else { if (t < hi) hi = t; }
        }
        if (empty || lo >= hi) continue;
        Rational tm = (lo + hi) / 2;
        Point m{e.a.x + d.x * tm, e.a.y + d.y * tm};
        if (strictly_inside(m)) return false;
    }
    return true;
}

// First boundary contact along the ray origin + t*dir for t > 0.
struct RayHit {
    Rational t;
    Point p;
    std::size_t edge;
};

inline std::optional<RayHit> first_hit(const std::vector<Point>& walk,
                                       const Point& origin, const Point& dir) {
    std::optional<RayHit> best;
    Rational dd = dot(dir, dir);
    if (dd == 0) throw GeomError("first_hit: zero direction");
    std::size_t n = walk.size();
    for (std::size_t i = 0; i < n; i++) {
        const Point& a = walk[i];
        const Point& b = walk[(i + 1) % n];
        if (a == b) continue;
        Point e = b - a;
        Rational denom = cross(dir, e);
        Rational t;
        if (denom != 0) {
            t = cross(a - origin, e) / denom;
            Rational u = cross(a - origin, dir) / denom;
            if (u < 0 || u > 1 || t <= 0) continue;
        } else {
            if (orient_sign(origin, Point{origin.x + dir.x, origin.y + dir.y}, a) != 0)
                continue;  // parallel, off the ray's line
            Rational ta = dot(a - origin, dir) / dd;
            Rational tb = dot(b - origin, dir) / dd;
            Rational tmin = ta < tb ? ta : tb;
            Rational tmax = ta < tb ? tb : ta;
            if (tmax <= 0) continue;
            t = tmin > 0 ? tmin : Rational(0);
            if (t <= 0) continue;  // overlap starts at or behind the origin
        }
        if (!best || t < best->t) best = RayHit{t, Point{origin.x + dir.x * t, origin.y + dir.y * t}, i};
    }
    return best;
}

// A point strictly off `base` in direction `dir`, pulled close enough that
// the open segment between them never meets the boundary. Used to decide
// which side of a boundary point is interior.
inline Point side_probe(const std::vector<Point>& walk, const Point& base,
                        const Point& dir) {
    Rational step(1);
    if (auto hit = first_hit(walk, base, dir)) step = hit->t / 2;
    if (step > 1) step = 1;
    return {base.x + dir.x * step, base.y + dir.y * step};
}

// Maximal segment of P's boundary-and-interior collinear with s and
// containing it. s must already lie in P.
inline Segment extension(const Polygon& P, const Segment& s) {
    if (s.degenerate()) throw GeomError("extension: degenerate segment");
    if (!segment_in_region(P.pts, s)) throw GeomError("extension: segment not inside polygon");
    Point d = s.b - s.a;
    Rational dd = dot(d, d);
    auto param = [&](const Point& p) { return dot(p - s.a, d) / dd; };
    std::vector<Rational> ts{Rational(0), Rational(1)};
    std::size_t n = P.size();
    Line ln = Line::through(s.a, s.b);
    for (std::size_t i = 0; i < n; i++) {
        const Point& a = P.pts[i];
        const Point& b = P.pts[(i + 1) % n];
        Rational fa = ln.eval(a), fb = ln.eval(b);
        if (fa == 0) ts.push_back(param(a));
        if (fb == 0) ts.push_back(param(b));
        if ((fa > 0 && fb < 0) || (fa < 0 && fb > 0)) {
            Rational t = fa / (fa - fb);
            Point q{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
            ts.push_back(param(q));
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    auto point_of = [&](const Rational& t) {
        return Point{s.a.x + d.x * t, s.a.y + d.y * t};
    };
    auto interval_inside = [&](std::size_t i) {
        Rational tm = (ts[i] + ts[i + 1]) / 2;
        return region_contains(P.pts, point_of(tm)) != Location::Exterior;
    };
    std::size_t lo = std::lower_bound(ts.begin(), ts.end(), Rational(0)) - ts.begin();
    std::size_t hi = std::lower_bound(ts.begin(), ts.end(), Rational(1)) - ts.begin();
    while (lo > 0 && interval_inside(lo - 1)) lo--;
    while (hi + 1 < ts.size() && interval_inside(hi)) hi++;
    return Segment(point_of(ts[lo]), point_of(ts[hi]));
}

namespace detail {

// Cyclic cleanup of a walk: drop repeated neighbors and pass-through straight
// corners (spike tips, where the walk reverses, stay). The result starts at
// its lexicographically smallest corner so equal regions compare equal.
inline std::vector<Point> clean_walk(std::vector<Point> w) {
    bool changed = true;
    while (w.size() > 2 && changed) {
        changed = false;
        std::vector<Point> out;
        std::size_t n = w.size();
        for (std::size_t i = 0; i < n; i++) {
            const Point& prev = w[(i + n - 1) % n];
            const Point& cur = w[i];
            const Point& next = w[(i + 1) % n];
            if (cur == next) { changed = true; continue; }
            if (prev != cur && orient_sign(prev, cur, next) == 0 &&
                dot(cur - prev, next - cur) > 0) {
                changed = true;
                continue;
            }
            out.push_back(cur);
        }
        w = std::move(out);
    }
    if (!w.empty())
        std::rotate(w.begin(), std::min_element(w.begin(), w.end(), lex_less), w.end());
    return w;
}

// Counterclockwise boundary arc of a region from a to b, both on the
// boundary and both included. a == b yields just {a}, not the full loop.
inline std::vector<Point> boundary_arc(const std::vector<Point>& region, const Point& a,
                                       const Point& b) {
    if (a == b) return {a};
    auto pa = boundary_position(region, a);
    auto pb = boundary_position(region, b);
    if (!pa || !pb) throw GeomError("boundary_arc: endpoint off the boundary");
    if (pa->edge == pb->edge && pa->t < pb->t) return {a, b};
    std::vector<Point> arc{a};
    std::size_t n = region.size();
    std::size_t guard = 0;
    for (std::size_t j = (pa->edge + 1) % n;; j = (j + 1) % n) {
        if (++guard > n + 1) throw GeomError("boundary_arc: runaway walk");
        if (pb->t == 0 && j == pb->edge) break;
        if (region[j] != arc.back()) arc.push_back(region[j]);
        if (pb->t != 0 && j == pb->edge) break;
    }
    if (b != arc.back()) arc.push_back(b);
    return arc;
}

}  // namespace detail

// Region of `walk` visible from c, as a CCW walk (empty if c sees no area).
// Exact rotational sweep: event directions point at every corner, plus the
// four axis directions so that no wedge between consecutive events opens
// wider than a quarter turn. Inside an open wedge the midline direction
// da + db passes through no corner and no collinear edge, so every boundary
// contact is a transversal crossing and the nearest crossed edge stays the
// same across the wedge. That edge, cut by the two wedge boundary rays,
// contributes one visible arc; mismatched neighbors stitch into window
// chords, and blocked wedges close the walk through c itself.
inline std::vector<Point> visibility_polygon(const std::vector<Point>& walk,
                                             const Point& c) {
    if (region_contains(walk, c) == Location::Exterior)
        throw GeomError("visibility_polygon: viewpoint outside the region");
    std::vector<Point> dirs{{Rational(1), Rational(0)},
                            {Rational(0), Rational(1)},
                            {Rational(-1), Rational(0)},
                            {Rational(0), Rational(-1)}};
    for (const Point& v : walk)
        if (v != c) dirs.push_back(v - c);
    std::sort(dirs.begin(), dirs.end(), ccw_dir_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(),
                           [](const Point& a, const Point& b) {
                               return !ccw_dir_less(a, b) && !ccw_dir_less(b, a);
                           }),
               dirs.end());
    std::size_t m = dirs.size();
    std::vector<Point> tokens;  // visible arcs interleaved with c for blocked wedges
    bool any = false;
    for (std::size_t i = 0; i < m; i++) {
        const Point& da = dirs[i];
        const Point& db = dirs[(i + 1) % m];
        Point dm = da + db;
        auto hit = first_hit(walk, c, dm);
        bool vis = false;
        if (hit) {
            Rational th = hit->t / 2;
            Point probe{c.x + dm.x * th, c.y + dm.y * th};
            vis = region_contains(walk, probe) != Location::Exterior;
        }
        if (!vis) {
            tokens.push_back(c);
            continue;
        }
        any = true;
        Line le = Line::through(walk[hit->edge], walk[(hit->edge + 1) % walk.size()]);
        auto A = line_intersection(Line::through(c, c + da), le);
        auto B = line_intersection(Line::through(c, c + db), le);
        if (!A || !B) throw GeomError("visibility_polygon: wedge ray parallel to its hit edge");
        tokens.push_back(*A);
        tokens.push_back(*B);
    }
    if (!any) return {};
    std::vector<Point> out = detail::clean_walk(std::move(tokens));
    if (out.size() < 3 || signed_area(out) <= 0) return {};
    return out;
}

// Visibility region of c plus the pockets it hides: each maximal sub-segment
// of a visible-walk edge whose midpoint is strictly interior is a window
// chord, and the pocket behind it is that chord plus the boundary arc it cuts
// off. The visible walk and the pockets tile the region exactly.
struct VisibilitySplit {
    std::vector<Point> visible;
    std::vector<std::vector<Point>> pockets;
};

inline VisibilitySplit visibility_split(const std::vector<Point>& region, const Point& c) {
    VisibilitySplit out;
    out.visible = visibility_polygon(region, c);
    if (out.visible.empty()) return out;
    std::size_t vn = out.visible.size();
    for (std::size_t i = 0; i < vn; i++) {
        const Point& u = out.visible[i];
        const Point& v = out.visible[(i + 1) % vn];
        if (u == v) continue;
        Segment uv{u, v};
        Point d = v - u;
        Rational dd = dot(d, d);
        std::vector<std::pair<Rational, Point>> stops{{Rational(0), u}};
        for (const Point& w : region)
            if (strictly_inside_segment(w, uv))
                stops.emplace_back(dot(w - u, d) / dd, w);
        stops.emplace_back(Rational(1), v);
        std::sort(stops.begin(), stops.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t s = 0; s + 1 < stops.size(); s++) {
            const Point& a = stops[s].second;
            const Point& b = stops[s + 1].second;
            if (a == b) continue;
            Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
            if (region_contains(region, mid) != Location::Interior) continue;
            std::vector<Point> pocket =
                detail::clean_walk(detail::boundary_arc(region, a, b));
            if (pocket.size() >= 3 && signed_area(pocket) > 0)
                out.pockets.push_back(std::move(pocket));
        }
    }
    return out;
}

}  // namespace starpart
