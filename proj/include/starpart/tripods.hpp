#pragma once

// Greedy tripod machinery on top of the candidate/DP layers: enumerate the
// support triples that can host a tripod, resolve the greedy (least
// restrictive) fake tripod per triple by recursing into the subpolygons cut
// off by the first pseudo-diagonal links, and feed the resulting tripod lines
// into the candidate pipeline for the final DP. Angles are never computed;
// every comparison is a clockwise-sweep stage plus sign tests.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "starpart/candidates.hpp"
#include "starpart/dp.hpp"
#include "starpart/kernel.hpp"
#include "starpart/partition.hpp"
#include "starpart/paths.hpp"
#include "starpart/polygon.hpp"
#include "starpart/visibility.hpp"

namespace starpart {

// Stage of w on the clockwise sweep that starts at ref: even stages are the
// axis hits (0 = along ref, 2 = quarter turn, 4 = opposite, 6 = three
// quarters), odd stages the open quadrants between them.
inline int cw_sweep_stage(const Point& ref, const Point& w) {
    if (ref == Point{} || w == Point{}) throw GeomError("cw_sweep_stage: zero direction");
    int c = -sign(cross(ref, w));  // > 0 when w lies clockwise of ref
    int d = sign(dot(ref, w));
    if (c == 0) return d > 0 ? 0 : 4;
    if (c > 0) return d > 0 ? 1 : d == 0 ? 2 : 3;
    return d < 0 ? 5 : d == 0 ? 6 : 7;
}

// Strict comparison of clockwise sweep angles from ref; directions on the
// same axis stage compare equal.
inline bool cw_sweep_less(const Point& ref, const Point& u, const Point& v) {
    int su = cw_sweep_stage(ref, u), sv = cw_sweep_stage(ref, v);
    if (su != sv) return su < sv;
    if (su % 2 == 0) return false;
    return sign(cross(u, v)) < 0;  // v still clockwise of u inside the quadrant
}

// The tripod tree is rooted at the face containing the first edge; reversed
// input is normalized to counterclockwise before picking it.
inline Segment extract_root_orientation(Polygon P) {
    if (P.size() < 3) throw GeomError("extract_root_orientation: degenerate polygon");
    if (!is_ccw(P.pts)) std::reverse(P.pts.begin(), P.pts.end());
    return P.edge(0);
}

// phi ordering between two tripods on the same supports, oriented the same
// way: the sweep from the parent-side edge direction clockwise to the leg.
inline bool tripod_angle_less(const Polygon& P, const FakeTripod& a, const FakeTripod& b) {
    if (a.supports != b.supports || a.parent_side != b.parent_side)
        throw GeomError("tripod_angle_less: tripods do not share supports and orientation");
    std::size_t d3 = a.supports[a.parent_side];
    Point D3 = P.corner(d3);
    Point ref = P.corner((d3 + 1) % P.size()) - D3;
    return cw_sweep_less(ref, a.point - D3, b.point - D3);
}

// Optimal piece count for the subpolygon right of a directed diagonal plus
// every center that the piece next to the diagonal's head may use in some
// optimal partition.
struct SubSolution {
    std::pair<std::size_t, std::size_t> diagonal;
    std::size_t k = 0;  // 0 when the candidate sets admit no partition
    std::vector<Point> prefix_centers;
};

// Keyed by the directed diagonal; valid for one polygon (one recursion level).
using SubregionMemo = std::map<std::pair<std::size_t, std::size_t>, SubSolution>;

struct MinStarOptions {
    CandidateCaps caps{};
    DpOptions dp{};
    std::size_t max_n = 24;  // practical guard for the full optimal pipeline
};

inline std::vector<std::array<std::size_t, 3>> valid_tripod_supports(const Polygon& P);
inline const SubSolution& solve_subregion(const Polygon& P, std::size_t d1, std::size_t d2,
                                          SubregionMemo& memo, const MinStarOptions& opts);
inline std::optional<FakeTripod> tripod_greedy_choice(const Polygon& P, std::size_t d1,
                                                      std::size_t d2, std::size_t d3,
                                                      SubregionMemo& memo,
                                                      const MinStarOptions& opts);

namespace detail {

inline int dir_half(const Point& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

inline bool ccw_dir_less(const Point& a, const Point& b) {
    int ha = dir_half(a), hb = dir_half(b);
    if (ha != hb) return ha < hb;
    return sign(cross(a, b)) > 0;
}

// Is there a direction w with cross(n, w) > 0 for every n? Equivalent to the
// largest cyclic gap between the directions exceeding half a turn.
inline bool open_cone_nonempty(std::vector<Point> ns) {
    for (const Point& v : ns)
        if (v == Point{}) throw GeomError("open_cone_nonempty: zero direction");
    std::sort(ns.begin(), ns.end(), ccw_dir_less);
    ns.erase(std::unique(ns.begin(), ns.end(),
                         [](const Point& a, const Point& b) {
                             return sign(cross(a, b)) == 0 && sign(dot(a, b)) > 0;
                         }),
             ns.end());
    if (ns.size() == 1) return true;
    for (std::size_t i = 0; i < ns.size(); i++)
        if (sign(cross(ns[i], ns[(i + 1) % ns.size()])) < 0) return true;
    return false;
}

// Can a leg leave the pseudo-triangle tip into its wedge (u counterclockwise
// to v) with both incident polygon edges strictly on the requested side?
inline bool leg_side_possible(const Point& u, const Point& v, const Point& e_prev,
                              const Point& e_next, bool left) {
    std::vector<Point> ns{u, Point{-v.x, -v.y}};
    if (left) {
        ns.push_back(Point{-e_prev.x, -e_prev.y});
        ns.push_back(Point{-e_next.x, -e_next.y});
    } else {
        ns.push_back(e_prev);
        ns.push_back(e_next);
    }
    return open_cone_nonempty(ns);
}

// The edges incident to every support must fall strictly on one common side
// of the legs toward C; otherwise the legs cannot bound the three subpolygons.
inline bool consistent_leg_sides(const Polygon& P, const std::array<std::size_t, 3>& ds,
                                 const Point& C) {
    std::size_t n = P.size();
    bool left = true, right = true;
    for (std::size_t d : ds) {
        Point D = P.corner(d);
        Point w = C - D;
        for (const Point& g : {P.corner((d + 1) % n) - D, P.corner((d + n - 1) % n) - D}) {
            int s = sign(cross(w, g));
            if (s <= 0) left = false;
            if (s >= 0) right = false;
        }
    }
    return left || right;
}

// Open chord between two concave corners, strictly interior except at its
// endpoints. Geodesics only bend at concave corners, so both ends are checked.
inline bool is_diagonal(const Polygon& P, std::size_t a, std::size_t b) {
    std::size_t n = P.size();
    if (a == b || (a + 1) % n == b || (b + 1) % n == a) return false;
    if (classify_corner(P, a) != CornerKind::Concave) return false;
    if (classify_corner(P, b) != CornerKind::Concave) return false;
    Point U = P.corner(a), V = P.corner(b);
    if (!sees(P, U, V)) return false;
    Segment chord{U, V};
    for (std::size_t i = 0; i < n; i++)
        if (strictly_inside_segment(P.corner(i), chord)) return false;
    Point mid{(U.x + V.x) / 2, (U.y + V.y) / 2};
    return region_contains(P.pts, mid) == Location::Interior;
}

// Region to the right of the directed diagonal corner(a) -> corner(b): the
// counterclockwise boundary arc from a to b, closed by the chord. Listed so
// that edge 0 is the chord and corner(1) is the diagonal's head a.
inline Polygon subpolygon_right(const Polygon& P, std::size_t a, std::size_t b) {
    std::size_t n = P.size();
    std::vector<Point> pts{P.corner(b)};
    for (std::size_t i = a; i != b; i = (i + 1) % n) pts.push_back(P.corner(i));
    return Polygon{pts};
}

inline std::size_t corner_index_of(const Polygon& P, const Point& q) {
    for (std::size_t i = 0; i < P.size(); i++)
        if (P.corner(i) == q) return i;
    throw GeomError("tripods: geodesic bend is not a polygon corner");
}

inline bool tripod_tie_less(const FakeTripod& a, const FakeTripod& b) {
    if (!(a.point == b.point)) return lex_less(a.point, b.point);
    if (!(a.child_centers[0] == b.child_centers[0]))
        return lex_less(a.child_centers[0], b.child_centers[0]);
    return lex_less(a.child_centers[1], b.child_centers[1]);
}

struct PipelineResult {
    std::size_t k = 0;
    Partition part;
    CandidateSets sets;
    std::vector<FakeTripod> tripods;
};

// Resolve greedy tripods for every valid support triple, skipping supports
// below min_support (used to keep subregion recursion off its own diagonal).
inline std::vector<FakeTripod> greedy_tripods(const Polygon& P, const MinStarOptions& opts,
                                              std::size_t min_support);

// Tripods, candidate sets, then the full DP.
inline PipelineResult run_pipeline(const Polygon& P, const MinStarOptions& opts,
                                   std::size_t min_support);

}  // namespace detail

// Concave corner triples that admit a pseudo-triangle whose legs can leave
// all three tips with the incident polygon edges on one consistent side.
inline std::vector<std::array<std::size_t, 3>> valid_tripod_supports(const Polygon& P) {
    std::vector<std::size_t> conc = concave_corners(P);
    std::vector<std::array<std::size_t, 3>> out;
    std::size_t n = P.size();
    for (std::size_t a = 0; a < conc.size(); a++)
        for (std::size_t b = a + 1; b < conc.size(); b++)
            for (std::size_t c = b + 1; c < conc.size(); c++) {
                auto pt3 = pseudo_triangle(P, conc[a], conc[b], conc[c]);
                if (!pt3) continue;
                std::size_t W = pt3->walk.size();
                bool left = true, right = true;
                for (std::size_t s = 0; s < 3 && (left || right); s++) {
                    std::size_t d = pt3->supports[s];
                    Point D = P.corner(d);
                    std::size_t w = W;
                    for (std::size_t i = 0; i < W; i++)
                        if (pt3->walk[i] == D) {
                            w = i;
                            break;
                        }
                    if (w == W) throw GeomError("valid_tripod_supports: support off the walk");
                    Point u = pt3->walk[(w + 1) % W] - D;
                    Point v = pt3->walk[(w + W - 1) % W] - D;
                    Point ep = P.corner((d + n - 1) % n) - D;
                    Point en = P.corner((d + 1) % n) - D;
                    if (left && !detail::leg_side_possible(u, v, ep, en, true)) left = false;
                    if (right && !detail::leg_side_possible(u, v, ep, en, false)) right = false;
                }
                if (left || right) out.push_back({conc[a], conc[b], conc[c]});
            }
    return out;
}

// Optimal count and prefix centers for the subpolygon right of the diagonal
// corner(d1) -> corner(d2), memoized. The prefix piece is the one covering
// the stretch of the diagonal next to d1.
inline const SubSolution& solve_subregion(const Polygon& P, std::size_t d1, std::size_t d2,
                                          SubregionMemo& memo, const MinStarOptions& opts = {}) {
    std::size_t n = P.size();
    if (n < 3) throw GeomError("solve_subregion: degenerate polygon");
    d1 %= n;
    d2 %= n;
    if (auto it = memo.find({d1, d2}); it != memo.end()) return it->second;
    if (!detail::is_diagonal(P, d1, d2))
        throw GeomError("solve_subregion: corner pair is not a diagonal");
    SubSolution sol;
    sol.diagonal = {d1, d2};
    Polygon sub = detail::subpolygon_right(P, d1, d2);
    try {
        ConvexRegion ker = kernel(sub);
        if (!ker.empty()) {
            // star-shaped: one piece, prefix = candidate centers in the kernel
            CandidateSets sets = candidate_sets(sub, {}, opts.caps);
            sol.k = 1;
            for (const Point& a : sets.s_cen)
                if (ker.contains(a)) sol.prefix_centers.push_back(a);
        } else {
            std::vector<FakeTripod> tripods = detail::greedy_tripods(sub, opts, 2);
            CandidateSets sets = candidate_sets(sub, tripods, opts.caps);
            // seed segment: from the boundary candidate closest to d1 on the
            // chord (edge 0 of sub) to d1 itself (corner 1 of sub)
            Point b1 = sub.corner(1);
            Point b2 = sub.corner(0);
            Rational best{-1};
            for (const Point& q : sets.s_bor) {
                Rational key = detail::walk_key(sub.pts, q);
                if (key < 1 && key > best) {
                    best = key;
                    b2 = q;
                }
            }
            auto [k, starts] = optimal_prefix(sub, sets, b1, b2, opts.dp);
            sol.k = k;
            sol.prefix_centers = std::move(starts);
        }
    } catch (const ResourceLimitError&) {
        throw;
    } catch (const GeomError&) {
        sol.k = 0;  // candidate sets admit no partition of this subregion
        sol.prefix_centers.clear();
    }
    return memo.emplace(std::make_pair(d1, d2), std::move(sol)).first->second;
}

// The least-restrictive realizable fake tripod on supports (d1, d2, d3), or
// nothing. The triple must wind counterclockwise with the first polygon edge
// on the parent arc (d3 -> d1); child centers come from the subregions cut
// off by the first links of the two child-side pseudo-diagonals.
inline std::optional<FakeTripod> tripod_greedy_choice(const Polygon& P, std::size_t d1,
                                                      std::size_t d2, std::size_t d3,
                                                      SubregionMemo& memo,
                                                      const MinStarOptions& opts = {}) {
    std::size_t n = P.size();
    if (d1 >= n || d2 >= n || d3 >= n)
        throw GeomError("tripod_greedy_choice: support out of range");
    if (d1 == d2 || d2 == d3 || d1 == d3) return std::nullopt;
    auto ahead = [n](std::size_t f, std::size_t t) { return (t + n - f) % n; };
    if (ahead(d1, d2) >= ahead(d1, d3)) return std::nullopt;  // not counterclockwise
    if (ahead(d3, 0) >= ahead(d3, d1)) return std::nullopt;   // root edge not on the parent arc

    auto pt3 = pseudo_triangle(P, d1, d2, d3);
    if (!pt3) return std::nullopt;
    std::size_t x2 = pt3->sides[0].links() <= 1
                         ? d2
                         : detail::corner_index_of(P, pt3->sides[0].vertices[1]);
    std::size_t y2 = pt3->sides[1].links() <= 1
                         ? d3
                         : detail::corner_index_of(P, pt3->sides[1].vertices[1]);
    if (!detail::is_diagonal(P, d1, x2) || !detail::is_diagonal(P, d2, y2)) return std::nullopt;
    const SubSolution& s1 = solve_subregion(P, d1, x2, memo, opts);
    const SubSolution& s2 = solve_subregion(P, d2, y2, memo, opts);
    if (s1.prefix_centers.empty() || s2.prefix_centers.empty()) return std::nullopt;

    Point D1 = P.corner(d1), D2 = P.corner(d2), D3 = P.corner(d3);
    Point refd = P.corner((d3 + 1) % n) - D3;
    std::optional<FakeTripod> best;
    for (const Point& A1 : s1.prefix_centers) {
        if (A1 == D1) continue;
        for (const Point& A2 : s2.prefix_centers) {
            if (A2 == D2) continue;
            auto C = line_intersection(Line::through(A1, D1), Line::through(A2, D2));
            if (!C || *C == D1 || *C == D2 || *C == D3) continue;
            // the legs continue the center-support segments past the supports
            if (!(dot(*C - D1, D1 - A1) > 0)) continue;
            if (!(dot(*C - D2, D2 - A2) > 0)) continue;
            if (region_contains(pt3->walk, *C) == Location::Exterior) continue;
            if (region_contains(P.pts, *C) != Location::Interior) continue;
            Point u1 = D1 - *C, u2 = D2 - *C, u3 = D3 - *C;
            int s12 = sign(cross(u1, u2)), s23 = sign(cross(u2, u3)), s31 = sign(cross(u3, u1));
            if (s12 == 0 || s12 != s23 || s23 != s31) continue;  // angles at C strictly convex
            if (!sees(pt3->walk, D1, *C) || !sees(pt3->walk, D2, *C) || !sees(pt3->walk, D3, *C))
                continue;  // legs must not leave the pseudo-triangle
            if (!detail::consistent_leg_sides(P, {d1, d2, d3}, *C)) continue;
            if (cw_sweep_stage(refd, *C - D3) > 3) continue;  // parent-side sweep under half a turn
            FakeTripod cand{{d1, d2, d3},
                            {A1, A2},
                            *C,
                            {Segment{D1, *C}, Segment{D2, *C}, Segment{D3, *C}},
                            2};
            if (!best) {
                best = cand;
            } else if (tripod_angle_less(P, cand, *best)) {
                best = cand;
            } else if (!tripod_angle_less(P, *best, cand) && detail::tripod_tie_less(cand, *best)) {
                best = cand;
            }
        }
    }
    return best;
}

inline std::vector<FakeTripod> detail::greedy_tripods(const Polygon& P,
                                                      const MinStarOptions& opts,
                                                      std::size_t min_support) {
    std::vector<FakeTripod> out;
    SubregionMemo memo;
    for (const auto& tri : valid_tripod_supports(P)) {
        if (tri[0] < min_support) continue;
        for (std::size_t r = 0; r < 3; r++) {
            auto t = tripod_greedy_choice(P, tri[r], tri[(r + 1) % 3], tri[(r + 2) % 3], memo,
                                          opts);
            if (t) out.push_back(*t);
        }
    }
    return out;
}

inline detail::PipelineResult detail::run_pipeline(const Polygon& P, const MinStarOptions& opts,
                                                   std::size_t min_support) {
    PipelineResult out;
    out.tripods = greedy_tripods(P, opts, min_support);
    out.sets = candidate_sets(P, out.tripods, opts.caps);
    auto [k, part] = dp_partition(P, out.sets, opts.dp);
    out.k = k;
    out.part = std::move(part);
    return out;
}

// Minimum star partition: greedy tripods feed the candidate pipeline, the DP
// does the rest. Degrades to corner-pair candidates when no triple is valid.
inline std::pair<std::size_t, Partition> min_star_partition(const Polygon& P_in,
                                                            const MinStarOptions& opts = {}) {
    Polygon P = P_in;
    if (P.size() < 3) throw GeomError("min_star_partition: degenerate polygon");
    if (!is_ccw(P.pts)) std::reverse(P.pts.begin(), P.pts.end());
    if (P.size() > opts.max_n)
        throw ResourceLimitError("min_star_partition: polygon exceeds the size limit");
    if (auto c = is_star_shaped(P)) {
        Partition part;
        part.pieces.push_back(StarPiece{WeaklySimplePolygon{P.pts}, *c});
        part.meta.method = "optimal";
        return {1, std::move(part)};
    }
    detail::PipelineResult pr = detail::run_pipeline(P, opts, 0);
    pr.part.meta.method = "optimal";
    return {pr.k, std::move(pr.part)};
}

// Extend partitions of the link subpolygons behind one pseudo-diagonal of a
// tripod across the matching sector of the pseudo-triangle. The piece owning
// the stretch next to the side's first support must be centered on the
// designated child center; it absorbs the region around the leg and C, every
// other touching piece grows by a straight continuation cut. Piece count is
// unchanged and the result covers the subpolygon bounded by the two legs.
inline Partition extend_into_pseudo_triangle(const Polygon& P,
                                             const std::vector<Partition>& subpartitions,
                                             const FakeTripod& t, std::size_t side) {
    if (side > 1) throw GeomError("extend_into_pseudo_triangle: side has no designated center");
    auto pt3 = pseudo_triangle(P, t.supports[0], t.supports[1], t.supports[2]);
    if (!pt3) throw GeomError("extend_into_pseudo_triangle: supports admit no pseudo-triangle");
    const Chain& chain = pt3->sides[side];
    std::size_t m = chain.links();
    if (subpartitions.size() != m)
        throw GeomError("extend_into_pseudo_triangle: one subpartition per pseudo-diagonal link");
    for (std::size_t e = 0; e < P.size(); e++)
        for (std::size_t i = 0; i + 1 < chain.vertices.size(); i++) {
            Segment link{chain.vertices[i], chain.vertices[i + 1]};
            if (on_segment(P.edge(e).a, link) && on_segment(P.edge(e).b, link))
                throw GeomError(
                    "extend_into_pseudo_triangle: pseudo-diagonal contains a polygon edge");
        }
    Point A = t.child_centers[side];
    Point C = t.point;

    auto chain_param = [&](const Point& q) -> std::optional<Rational> {
        for (std::size_t i = 0; i + 1 < chain.vertices.size(); i++) {
            Segment link{chain.vertices[i], chain.vertices[i + 1]};
            if (!on_segment(q, link)) continue;
            Point d = link.b - link.a;
            Rational t0 = d.x != 0 ? (q.x - link.a.x) / d.x : (q.y - link.a.y) / d.y;
            return Rational(static_cast<long long>(i)) + t0;
        }
        return std::nullopt;
    };

    std::vector<StarPiece> pieces;
    for (const Partition& part : subpartitions)
        for (const StarPiece& p : part.pieces) pieces.push_back(p);

    struct Contact {
        std::size_t piece = 0;
        Rational lo, hi;
        std::size_t run_begin = 0;  // walk index of the hi end
        std::size_t run_len = 0;
        Point x_hi, x_lo;
        Point before, after;  // walk neighbors of the contact run
    };
    std::vector<Contact> contacts;
    for (std::size_t pi = 0; pi < pieces.size(); pi++) {
        const std::vector<Point>& walk = pieces[pi].boundary.pts;
        std::size_t N = walk.size();
        std::vector<std::optional<Rational>> par(N);
        std::size_t count = 0;
        for (std::size_t i = 0; i < N; i++) {
            par[i] = chain_param(walk[i]);
            if (par[i]) count++;
        }
        if (count == 0) continue;
        if (count == N)
            throw GeomError("extend_into_pseudo_triangle: piece degenerates onto the diagonal");
        std::size_t st = N;
        for (std::size_t i = 0; i < N; i++)
            if (par[i] && !par[(i + N - 1) % N]) {
                st = i;
                break;
            }
        std::size_t len = 0;
        while (len < N && par[(st + len) % N]) len++;
        if (len != count)
            throw GeomError(
                "extend_into_pseudo_triangle: piece touches the diagonal in two stretches");
        for (std::size_t i = 0; i + 1 < len; i++) {
            const Rational& a = *par[(st + i) % N];
            const Rational& b = *par[(st + i + 1) % N];
            if (!(b < a))
                throw GeomError(
                    "extend_into_pseudo_triangle: piece runs along the diagonal the wrong way");
            Point mid = walk[(st + i) % N] + walk[(st + i + 1) % N];
            if (!chain_param(Point{mid.x / 2, mid.y / 2}))
                throw GeomError(
                    "extend_into_pseudo_triangle: piece boundary leaves the diagonal mid-run");
        }
        Contact c;
        c.piece = pi;
        c.hi = *par[st];
        c.lo = *par[(st + len - 1) % N];
        c.run_begin = st;
        c.run_len = len;
        c.x_hi = walk[st];
        c.x_lo = walk[(st + len - 1) % N];
        c.before = walk[(st + N - 1) % N];
        c.after = walk[(st + len) % N];
        contacts.push_back(c);
    }
    if (contacts.empty())
        throw GeomError("extend_into_pseudo_triangle: no piece touches the pseudo-diagonal");
    std::sort(contacts.begin(), contacts.end(),
              [](const Contact& a, const Contact& b) { return a.lo < b.lo; });
    if (contacts.front().lo != 0 || contacts.back().hi != Rational(static_cast<long long>(m)))
        throw GeomError("extend_into_pseudo_triangle: pieces do not cover the pseudo-diagonal");
    for (std::size_t j = 0; j + 1 < contacts.size(); j++)
        if (contacts[j].hi != contacts[j + 1].lo)
            throw GeomError("extend_into_pseudo_triangle: contact stretches do not abut");
    for (std::size_t j = 1; j < contacts.size(); j++)
        if (!(contacts[j].lo < contacts[j].hi))
            throw GeomError("extend_into_pseudo_triangle: degenerate contact off the support");
    if (!(pieces[contacts.front().piece].center == A))
        throw GeomError(
            "extend_into_pseudo_triangle: designated center does not own the first stretch");

    // sector of the pseudo-triangle behind this side: chain plus C
    std::vector<Point> rem = chain.vertices;
    rem.push_back(C);
    std::vector<std::vector<Point>> cells(contacts.size());
    for (std::size_t j = 0; j + 1 < contacts.size(); j++) {
        const Contact& cur = contacts[j];
        Point X = cur.x_hi;
        Point dir;
        if (j == 0) {
            if (X == A)
                throw GeomError("extend_into_pseudo_triangle: designated center on the diagonal");
            dir = X - A;  // blue cut: continue the center-support sight line
        } else {
            if (!(cur.before == contacts[j + 1].after) && rat_den(cur.hi) != 1)
                throw GeomError(
                    "extend_into_pseudo_triangle: ambiguous extension edge at the diagonal");
            if (cur.before == X)
                throw GeomError("extend_into_pseudo_triangle: zero-length extension edge");
            dir = X - cur.before;  // continue the edge arriving at the diagonal
        }
        auto hit = first_hit(rem, X, dir);
        if (!hit) throw GeomError("extend_into_pseudo_triangle: extension ray leaves the sector");
        cells[j] = detail::boundary_arc(rem, hit->p, X);  // closes with the cut X -> hit
        rem = detail::boundary_arc(rem, X, hit->p);
    }
    cells.back() = rem;

    for (std::size_t j = 0; j < contacts.size(); j++) {
        const Contact& cur = contacts[j];
        const std::vector<Point>& cell = cells[j];
        std::vector<Point>& walk = pieces[cur.piece].boundary.pts;
        std::size_t N = walk.size();
        std::vector<Point> merged;
        if (cur.run_len == 1) {
            // point contact: splice the whole cell cycle in at the pinch
            std::size_t at = cell.size();
            for (std::size_t i = 0; i < cell.size(); i++)
                if (cell[i] == cur.x_hi) {
                    at = i;
                    break;
                }
            if (at == cell.size())
                throw GeomError("extend_into_pseudo_triangle: pinch vertex off its cell");
            merged.push_back(cur.x_hi);
            for (std::size_t i = 1; i <= cell.size(); i++)
                merged.push_back(cell[(at + i) % cell.size()]);
            for (std::size_t i = 1; i < N; i++) merged.push_back(walk[(cur.run_begin + i) % N]);
        } else {
            std::vector<Point> arc = detail::boundary_arc(cell, cur.x_hi, cur.x_lo);
            merged = arc;
            for (std::size_t i = cur.run_len; i < N; i++)
                merged.push_back(walk[(cur.run_begin + i) % N]);
        }
        walk = std::move(merged);
    }

    Partition out;
    out.meta.method = "extend";
    for (StarPiece& p : pieces) out.pieces.push_back(std::move(p));
    return out;
}

}  // namespace starpart
