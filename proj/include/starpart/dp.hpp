#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "starpart/candidates.hpp"
#include "starpart/partition.hpp"
#include "starpart/visibility.hpp"

namespace starpart {

// Minimum star partition over fixed candidate sets, by dynamic programming
// over separators. A separator is a polyline between two boundary candidates
// whose inner corners are star centers: short B1-A1-B2, or long
// B1-A1-Z-A2-B2 where Z is the corner the two pieces around A1 and A2 share.
// A state owns the part of P enclosed between the counterclockwise boundary
// chain P[B1:B2] and the polyline; its value is the least number of pieces
// needed for that part, not counting the pieces of the polyline's own
// centers. Visibility inside a state is taken against the enclosed walk, so
// the separator acts as a wall. Walks may carry zero-length spike edges.

struct SepKey {
    bool is_long = false;
    std::array<Point, 5> p{};  // short: b1 a1 b2 - - ; long: b1 a1 z a2 b2

    friend bool operator==(const SepKey& x, const SepKey& y) {
        return x.is_long == y.is_long && x.p == y.p;
    }
    friend bool operator!=(const SepKey& x, const SepKey& y) { return !(x == y); }
};

struct SepKeyLess {
    bool operator()(const SepKey& x, const SepKey& y) const {
        if (x.is_long != y.is_long) return y.is_long;
        for (std::size_t i = 0; i < 5; i++) {
            if (x.p[i] != y.p[i]) return lex_less(x.p[i], y.p[i]);
        }
        return false;
    }
};

inline SepKey short_key(const Point& b1, const Point& a1, const Point& b2) {
    return SepKey{false, {b1, a1, b2, Point{}, Point{}}};
}

inline SepKey long_key(const Point& b1, const Point& a1, const Point& z, const Point& a2,
                       const Point& b2) {
    return SepKey{true, {b1, a1, z, a2, b2}};
}

struct DpTransition {
    int case_id = 0;     // which rule produced it, 0..5
    std::size_t cost = 0;  // pieces the rule opens (cases 2 and 5)
    std::vector<SepKey> children;
    std::vector<Point> choice;  // picked B' / A' / Z' / (A', B')

    friend bool operator==(const DpTransition& a, const DpTransition& b) {
        return a.case_id == b.case_id && a.cost == b.cost && a.children == b.children &&
               a.choice == b.choice;
    }
};

struct DpEntry {
    std::size_t value = 0;  // min extra pieces; n means not achievable
    std::vector<DpTransition> trans;
    std::vector<Point> region;  // the enclosed walk
};

struct DpOptions {
    std::size_t max_states = 200000;
    bool simplify_pieces = false;
};

struct PairLexLess {
    bool operator()(const std::pair<Point, Point>& a, const std::pair<Point, Point>& b) const {
        if (a.first != b.first) return lex_less(a.first, b.first);
        return lex_less(a.second, b.second);
    }
};

struct DpContext {
    Polygon P;
    CandidateSets sets;  // s_cen and s_int lex-sorted, s_bor in boundary order
    DpOptions opts;
    std::map<SepKey, DpEntry, SepKeyLess> memo;
    std::set<SepKey, SepKeyLess> rejected;
    std::map<Point, Rational, LexLess> bor_key;  // boundary position as edge + t
    std::map<std::pair<Point, Point>, bool, PairLexLess> vis;  // visibility in P, unordered pairs
    bool dirty = false;
};

// Visibility against the full polygon, memoized; every separator validation
// and every in-state fast path funnels through here.
inline bool dp_sees(DpContext& ctx, const Point& a, const Point& b) {
    if (a == b) return true;
    auto key = lex_less(b, a) ? std::make_pair(b, a) : std::make_pair(a, b);
    auto it = ctx.vis.find(key);
    if (it != ctx.vis.end()) return it->second;
    bool ok = segment_in_region(ctx.P.pts, Segment{key.first, key.second});
    ctx.vis.emplace(std::move(key), ok);
    return ok;
}

namespace detail {

inline Rational walk_key(const std::vector<Point>& walk, const Point& q) {
    auto pos = boundary_position(walk, q);
    if (!pos) throw GeomError("dp: boundary candidate off the boundary");
    return Rational(static_cast<long long>(pos->edge)) + pos->t;
}

inline Rational cyc_ahead(const Rational& from, const Rational& to, std::size_t n) {
    Rational d = to - from;
    if (d < 0) d += Rational(static_cast<long long>(n));
    return d;
}

}  // namespace detail

inline DpContext make_dp_context(const Polygon& P, const CandidateSets& sets, DpOptions opts = {}) {
    DpContext ctx;
    ctx.P = P;
    ctx.sets = sets;
    ctx.opts = opts;
    auto lex_unique = [](std::vector<Point>& v) {
        std::sort(v.begin(), v.end(), lex_less);
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    lex_unique(ctx.sets.s_cen);
    lex_unique(ctx.sets.s_int);
    for (const Point& q : sets.s_bor) ctx.bor_key.emplace(q, detail::walk_key(P.pts, q));
    std::vector<std::pair<Rational, Point>> order;
    for (const auto& [q, k] : ctx.bor_key) order.emplace_back(k, q);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ctx.sets.s_bor.clear();
    for (auto& [k, q] : order) ctx.sets.s_bor.push_back(q);
    // chain adjacency must imply a straight chain, so every corner of P has
    // to be a boundary candidate
    for (const Point& c : P.pts)
        if (!ctx.bor_key.count(c)) throw GeomError("dp: polygon corner missing from s_bor");
    for (const Point& q : ctx.sets.s_cen)
        if (point_location(P, q) == Location::Exterior)
            throw GeomError("dp: center candidate outside the polygon");
    for (const Point& q : ctx.sets.s_int)
        if (point_location(P, q) == Location::Exterior)
            throw GeomError("dp: interior candidate outside the polygon");
    return ctx;
}

// The walk a separator encloses: chain b1 -> b2 counterclockwise along the
// boundary, then the polyline walked back from b2 to b1.
inline std::vector<Point> sep_walk(const DpContext& ctx, const SepKey& k) {
    const Point& b2 = k.is_long ? k.p[4] : k.p[2];
    std::vector<Point> w = detail::boundary_arc(ctx.P.pts, k.p[0], b2);
    if (k.is_long) {
        w.push_back(k.p[3]);
        w.push_back(k.p[2]);
        w.push_back(k.p[1]);
    } else {
        w.push_back(k.p[1]);
    }
    std::vector<Point> out;
    for (const Point& q : w)  // drop repeats, cyclically
        if (out.empty() || out.back() != q) out.push_back(q);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

// Validate a separator and register its state. False means the separator is
// not usable (polyline leaves P or the enclosed walk is not weakly simple).
inline bool dp_add_state(DpContext& ctx, const SepKey& k, std::vector<SepKey>& work) {
    if (ctx.memo.count(k)) return true;
    if (ctx.rejected.count(k)) return false;
    auto seg_ok = [&](const Point& a, const Point& b) { return dp_sees(ctx, a, b); };
    bool ok = seg_ok(k.p[0], k.p[1]);
    if (ok && k.is_long)
        ok = seg_ok(k.p[1], k.p[2]) && seg_ok(k.p[2], k.p[3]) && seg_ok(k.p[3], k.p[4]);
    if (ok && !k.is_long) ok = seg_ok(k.p[1], k.p[2]);
    std::vector<Point> w;
    if (ok) {
        w = sep_walk(ctx, k);
        ok = w.size() >= 2 && !find_proper_self_crossing(w) && !(signed_area(w) < 0);
    }
    if (!ok) {
        ctx.rejected.insert(k);
        return false;
    }
    if (ctx.memo.size() >= ctx.opts.max_states)
        throw ResourceLimitError("dp: separator state budget exhausted");
    DpEntry e;
    e.value = ctx.P.size();
    e.region = std::move(w);
    ctx.memo.emplace(k, std::move(e));
    work.push_back(k);
    ctx.dirty = true;
    return true;
}

inline void dp_expand(DpContext& ctx, const SepKey& k, std::vector<SepKey>& work) {
    const std::vector<Point>& region = ctx.memo.at(k).region;
    const std::size_t n = ctx.P.size();
    const Point& b1 = k.p[0];
    const Point& b2 = k.is_long ? k.p[4] : k.p[2];
    const Rational kb1 = ctx.bor_key.at(b1);
    const bool point_chain = (b1 == b2);
    const Rational span =
        point_chain ? Rational(0) : detail::cyc_ahead(kb1, ctx.bor_key.at(b2), n);
    const std::size_t fence_len = k.is_long ? 5 : 3;
    auto in_region = [&](const Point& q) {
        return region_contains(region, q) != Location::Exterior;
    };
    // Visibility inside the state: global visibility in P, then crossing
    // tests against the separator polyline. Both endpoints must already lie
    // in the region; any grazing contact with the polyline falls back to the
    // exact region test.
    auto sub_sees = [&](const Point& x, const Point& y) {
        if (!dp_sees(ctx, x, y)) return false;
        bool on_x[5] = {}, on_y[5] = {};
        bool fx = false, fy = false;
        for (std::size_t i = 0; i < fence_len; i++) {
            on_x[i] = (k.p[i] == x);
            on_y[i] = (k.p[i] == y);
            fx = fx || on_x[i];
            fy = fy || on_y[i];
        }
        if (fx && fy) {
            for (std::size_t i = 0; i + 1 < fence_len; i++)
                if ((on_x[i] && on_y[i + 1]) || (on_y[i] && on_x[i + 1]))
                    return true;  // the segment is a polyline edge
            return segment_in_region(region, Segment{x, y});
        }
        for (std::size_t i = 0; i + 1 < fence_len; i++) {
            const Point& u = k.p[i];
            const Point& v = k.p[i + 1];
            if (u == v) continue;
            if (on_x[i] || on_x[i + 1] || on_y[i] || on_y[i + 1]) {
                // shares one endpoint with this polyline edge: blocked only
                // if it runs back along the edge
                const Point& s = (on_x[i] || on_x[i + 1]) ? x : y;
                const Point& t = (on_x[i] || on_x[i + 1]) ? y : x;
                const Point& w = (on_x[i] || on_y[i]) ? v : u;
                if (orient_sign(s, t, w) == 0 && sign(dot(t - s, w - s)) > 0)
                    return segment_in_region(region, Segment{x, y});
                continue;
            }
            int o1 = orient_sign(x, y, u), o2 = orient_sign(x, y, v);
            int o3 = orient_sign(u, v, x), o4 = orient_sign(u, v, y);
            if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0)
                return segment_in_region(region, Segment{x, y});
            if (o1 != o2 && o3 != o4) return false;  // crosses the separator
        }
        return true;
    };
    auto strictly_on_chain = [&](const Point& q) {
        if (point_chain || q == b1 || q == b2) return false;
        auto it = ctx.bor_key.find(q);
        if (it == ctx.bor_key.end()) return false;
        Rational d = detail::cyc_ahead(kb1, it->second, n);
        return d > 0 && d < span;
    };
    auto on_chain = [&](const Point& q) { return q == b1 || q == b2 || strictly_on_chain(q); };

    std::vector<DpTransition> out;
    if (!k.is_long) {
        const Point& a1 = k.p[1];
        // case 0: chain is one straight stretch, the triangle covers the state
        bool adjacent = true;
        if (!point_chain)
            for (const Point& q : ctx.sets.s_bor)
                if (strictly_on_chain(q)) {
                    adjacent = false;
                    break;
                }
        if (adjacent) out.push_back(DpTransition{0, 0, {}, {}});
        // case 1: split the chain where the center sees a boundary candidate
        for (const Point& q : ctx.sets.s_bor) {
            if (!strictly_on_chain(q)) continue;
            if (!sub_sees(a1, q)) continue;
            SepKey c1 = short_key(b1, a1, q);
            SepKey c2 = short_key(q, a1, b2);
            if (dp_add_state(ctx, c1, work) && dp_add_state(ctx, c2, work))
                out.push_back(DpTransition{1, 0, {c1, c2}, {q}});
        }
        // case 2: open a new piece whose center sees b1; the new piece and
        // the old one share the (for now degenerate) corner at b1
        for (const Point& a : ctx.sets.s_cen) {
            if (a == a1 || !in_region(a)) continue;
            if (!sub_sees(a, b1)) continue;
            SepKey c = long_key(b1, a, b1, a1, b2);
            if (dp_add_state(ctx, c, work)) out.push_back(DpTransition{2, 1, {c}, {a}});
        }
    } else {
        const Point& a1 = k.p[1];
        const Point& z = k.p[2];
        const Point& a2 = k.p[3];
        // case 3: the shared corner reached the chain, split into two shorts
        if (ctx.bor_key.count(z) && on_chain(z)) {
            SepKey c1 = short_key(b1, a1, z);
            SepKey c2 = short_key(z, a2, b2);
            if (dp_add_state(ctx, c1, work) && dp_add_state(ctx, c2, work))
                out.push_back(DpTransition{3, 0, {c1, c2}, {}});
        }
        // case 4: slide the shared corner to a candidate both centers and
        // the old corner see; the freed triangles join the two pieces. The
        // centers must flank the slide segment, else the triangles overlap
        // instead of tiling the swept quad.
        for (const Point& q : ctx.sets.s_int) {
            if (q == z) continue;
            if (orient_sign(z, q, a1) * orient_sign(z, q, a2) > 0) continue;
            if (!in_region(q)) continue;
            if (!sub_sees(a1, q) || !sub_sees(a2, q) || !sub_sees(z, q)) continue;
            SepKey c = long_key(b1, a1, q, a2, b2);
            if (dp_add_state(ctx, c, work)) out.push_back(DpTransition{4, 0, {c}, {q}});
        }
        // case 5: open a new piece between the two, touching the chain
        for (const Point& a : ctx.sets.s_cen) {
            if (a == a1 || a == a2 || !in_region(a)) continue;
            if (!sub_sees(a, z)) continue;
            for (const Point& q : ctx.sets.s_bor) {
                if (!on_chain(q)) continue;
                if (!sub_sees(a, q)) continue;
                SepKey c1 = long_key(b1, a1, z, a, q);
                SepKey c2 = long_key(q, a, z, a2, b2);
                if (dp_add_state(ctx, c1, work) && dp_add_state(ctx, c2, work))
                    out.push_back(DpTransition{5, 1, {c1, c2}, {a, q}});
            }
        }
    }
    ctx.memo.at(k).trans = std::move(out);
}

inline void dp_discover(DpContext& ctx, const SepKey& root) {
    std::vector<SepKey> work;
    if (!dp_add_state(ctx, root, work)) throw GeomError("dp: invalid separator");
    while (!work.empty()) {
        SepKey k = work.back();
        work.pop_back();
        dp_expand(ctx, k, work);
    }
}

// Chaotic descent from the all-n table. Zero-cost case-4 moves admit cycles,
// so values are pinned by iterating to the greatest fixpoint, which is the
// cheapest finite derivation (any fixpoint underestimates every derivation).
inline void dp_relax(DpContext& ctx) {
    if (!ctx.dirty) return;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [key, e] : ctx.memo) {
            std::size_t best = e.value;
            for (const DpTransition& t : e.trans) {
                std::size_t v = t.cost;
                for (const SepKey& c : t.children) v += ctx.memo.at(c).value;
                if (v < best) best = v;
            }
            if (best < e.value) {
                e.value = best;
                changed = true;
            }
        }
    }
    ctx.dirty = false;
}

inline std::size_t solve_short(DpContext& ctx, const Point& b1, const Point& a1,
                               const Point& b2) {
    if (!ctx.bor_key.count(b1) || !ctx.bor_key.count(b2))
        throw GeomError("dp: separator endpoint not in s_bor");
    if (!std::binary_search(ctx.sets.s_cen.begin(), ctx.sets.s_cen.end(), a1, lex_less))
        throw GeomError("dp: separator center not in s_cen");
    SepKey k = short_key(b1, a1, b2);
    dp_discover(ctx, k);
    dp_relax(ctx);
    return ctx.memo.at(k).value;
}

inline std::size_t solve_long(DpContext& ctx, const Point& b1, const Point& a1, const Point& z,
                              const Point& a2, const Point& b2) {
    if (!ctx.bor_key.count(b1) || !ctx.bor_key.count(b2))
        throw GeomError("dp: separator endpoint not in s_bor");
    for (const Point& a : {a1, a2})
        if (!std::binary_search(ctx.sets.s_cen.begin(), ctx.sets.s_cen.end(), a, lex_less))
            throw GeomError("dp: separator center not in s_cen");
    if (!std::binary_search(ctx.sets.s_int.begin(), ctx.sets.s_int.end(), z, lex_less))
        throw GeomError("dp: shared corner not in s_int");
    SepKey k = long_key(b1, a1, z, a2, b2);
    dp_discover(ctx, k);
    dp_relax(ctx);
    return ctx.memo.at(k).value;
}

// Seed pair: b2 is corner 0 and b1 its counterclockwise successor among the
// boundary candidates, so the chain b1 -> b2 covers the whole boundary but
// the straight stretch b2 -> b1. Some piece of any partition must see that
// stretch, which makes the seed triangle b1-A-b2 exhaustive over A.
inline std::pair<Point, Point> dp_seed(const Polygon& P, const CandidateSets& sets) {
    const Point b2 = P.corner(0);
    Rational k2 = detail::walk_key(P.pts, b2);
    const Point* best = nullptr;
    Rational bd;
    for (const Point& q : sets.s_bor) {
        if (q == b2) continue;
        Rational d = detail::cyc_ahead(k2, detail::walk_key(P.pts, q), P.size());
        if (!best || d < bd) {
            best = &q;
            bd = d;
        }
    }
    if (!best) throw GeomError("dp: s_bor needs a second point for the seed");
    return {*best, b2};
}

namespace detail {

struct Fan {
    Point center;
    std::vector<std::pair<Point, Point>> tris;  // ccw bases of center-u-v triangles
    std::vector<Point> spikes;                  // degenerate rays center -> tip
};

inline void fan_add(Fan& f, Point u, Point v) {
    int o = orient_sign(f.center, u, v);
    if (o < 0) {
        std::swap(u, v);
        o = 1;
    }
    if (o > 0) {
        f.tris.emplace_back(u, v);
        return;
    }
    if (u == f.center && v == f.center) return;
    if (u == f.center) {
        f.spikes.push_back(v);
        return;
    }
    if (v == f.center) {
        f.spikes.push_back(u);
        return;
    }
    if (dot(u - f.center, v - f.center) < 0) {  // the base passes the apex
        f.spikes.push_back(u);
        f.spikes.push_back(v);
    } else {
        f.spikes.push_back(dot(u - f.center, u - f.center) >= dot(v - f.center, v - f.center)
                               ? u
                               : v);
    }
}

// Union of a fan of apex-sharing triangles and spikes into one walk. Pieces
// of the dp are exactly such fans: every triangle a state hands to a piece
// has the piece's center as its apex.
inline std::vector<Point> fan_walk(const Fan& f) {
    const Point& A = f.center;
    auto dir = [&](const Point& q) { return q - A; };
    std::vector<Point> sp;
    for (const Point& q : f.spikes) {
        bool covered = false;
        for (const auto& [u, v] : f.tris)
            if (orient_sign(A, u, q) >= 0 && orient_sign(u, v, q) >= 0 &&
                orient_sign(v, A, q) >= 0) {
                covered = true;
                break;
            }
        if (!covered) sp.push_back(q);
    }
    std::sort(sp.begin(), sp.end(),
              [&](const Point& x, const Point& y) { return ccw_dir_less(dir(x), dir(y)); });
    std::vector<Point> tips;  // same direction: keep the farthest tip only
    for (const Point& q : sp) {
        if (!tips.empty() && cross(dir(tips.back()), dir(q)) == 0 &&
            dot(dir(tips.back()), dir(q)) > 0) {
            if (dot(dir(q), dir(q)) > dot(dir(tips.back()), dir(tips.back()))) tips.back() = q;
            continue;
        }
        tips.push_back(q);
    }
    struct Item {
        Point u, v;
        bool spike;
    };
    std::vector<Item> items;
    for (const Point& q : tips) items.push_back({q, q, true});
    for (const auto& [u, v] : f.tris) items.push_back({u, v, false});
    std::sort(items.begin(), items.end(), [&](const Item& x, const Item& y) {
        if (ccw_dir_less(dir(x.u), dir(y.u))) return true;
        if (ccw_dir_less(dir(y.u), dir(x.u))) return false;
        return x.spike && !y.spike;
    });
    if (items.empty()) throw GeomError("dp: piece reconstructed without geometry");
    auto same_ray = [&](const Point& x, const Point& y) {
        return cross(dir(x), dir(y)) == 0 && dot(dir(x), dir(y)) > 0;
    };
    std::vector<Point> w;
    std::size_t m = items.size();
    for (std::size_t i = 0; i < m; i++) {
        const Item& prev = items[(i + m - 1) % m];
        const Item& cur = items[i];
        const Point& pe = prev.spike ? prev.u : prev.v;
        if (pe != cur.u && !same_ray(pe, cur.u)) w.push_back(A);
        w.push_back(cur.u);
        if (!cur.spike && cur.v != cur.u) w.push_back(cur.v);
    }
    if (w.size() == 1) w.insert(w.begin(), A);
    w = clean_walk(std::move(w));
    if (w.size() < 2) throw GeomError("dp: piece walk degenerated");
    return w;
}

}  // namespace detail

// Derivation heights over value-achieving transitions, so the replay never
// follows a zero-cost cycle: the chosen transition always has strictly
// shallower children.
inline std::map<SepKey, std::size_t, SepKeyLess> dp_plan(const DpContext& ctx) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::map<SepKey, std::size_t, SepKeyLess> depth;
    for (const auto& [k, e] : ctx.memo) depth.emplace(k, unset);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [k, e] : ctx.memo) {
            std::size_t& dk = depth.at(k);
            for (const DpTransition& t : e.trans) {
                std::size_t v = t.cost;
                std::size_t d = 0;
                bool grounded = true;
                for (const SepKey& c : t.children) {
                    v += ctx.memo.at(c).value;
                    std::size_t dc = depth.at(c);
                    if (dc == unset) {
                        grounded = false;
                        break;
                    }
                    d = std::max(d, dc);
                }
                if (!grounded || v != e.value) continue;
                if (d + 1 < dk) {
                    dk = d + 1;
                    changed = true;
                }
            }
        }
    }
    std::map<SepKey, std::size_t, SepKeyLess> chosen;
    auto choice_less = [](const std::vector<Point>& a, const std::vector<Point>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
    };
    for (const auto& [k, e] : ctx.memo) {
        std::size_t bi = unset, bd = unset;
        for (std::size_t i = 0; i < e.trans.size(); i++) {
            const DpTransition& t = e.trans[i];
            std::size_t v = t.cost;
            std::size_t d = 0;
            bool grounded = true;
            for (const SepKey& c : t.children) {
                v += ctx.memo.at(c).value;
                std::size_t dc = depth.at(c);
                if (dc == unset) {
                    grounded = false;
                    break;
                }
                d = std::max(d, dc);
            }
            if (!grounded || v != e.value) continue;
            d += 1;
            if (bi == unset || d < bd ||
                (d == bd && (t.case_id < e.trans[bi].case_id ||
                             (t.case_id == e.trans[bi].case_id &&
                              choice_less(t.choice, e.trans[bi].choice))))) {
                bi = i;
                bd = d;
            }
        }
        if (bi != unset) chosen.emplace(k, bi);
    }
    return chosen;
}

inline Partition dp_reconstruct(const DpContext& ctx, const Point& b1, const Point& a,
                                const Point& b2) {
    auto chosen = dp_plan(ctx);
    std::vector<detail::Fan> fans;
    fans.push_back({a, {}, {}});
    detail::fan_add(fans[0], b1, b2);  // the seed triangle
    std::function<void(const SepKey&, std::size_t)> go_short;
    std::function<void(const SepKey&, std::size_t, std::size_t)> go_long;
    auto pick = [&](const SepKey& k) -> const DpTransition& {
        auto it = chosen.find(k);
        if (it == chosen.end()) throw GeomError("dp: replay reached an unsolved state");
        return ctx.memo.at(k).trans[it->second];
    };
    go_short = [&](const SepKey& k, std::size_t ia) {
        const DpTransition& t = pick(k);
        switch (t.case_id) {
            case 0:
                detail::fan_add(fans[ia], k.p[0], k.p[2]);
                break;
            case 1:
                go_short(t.children[0], ia);
                go_short(t.children[1], ia);
                break;
            case 2: {
                std::size_t ni = fans.size();
                fans.push_back({t.choice[0], {}, {}});
                detail::fan_add(fans[ni], k.p[0], k.p[0]);  // sight spike to b1
                go_long(t.children[0], ni, ia);
                break;
            }
            default:
                throw GeomError("dp: short state replayed a long rule");
        }
    };
    go_long = [&](const SepKey& k, std::size_t ia1, std::size_t ia2) {
        const DpTransition& t = pick(k);
        switch (t.case_id) {
            case 3:
                go_short(t.children[0], ia1);
                go_short(t.children[1], ia2);
                break;
            case 4:
                detail::fan_add(fans[ia1], t.choice[0], k.p[2]);
                detail::fan_add(fans[ia2], k.p[2], t.choice[0]);
                go_long(t.children[0], ia1, ia2);
                break;
            case 5: {
                std::size_t ni = fans.size();
                fans.push_back({t.choice[0], {}, {}});
                detail::fan_add(fans[ni], t.choice[1], t.choice[1]);  // sight spike to B'
                go_long(t.children[0], ia1, ni);
                go_long(t.children[1], ni, ia2);
                break;
            }
            default:
                throw GeomError("dp: long state replayed a short rule");
        }
    };
    go_short(short_key(b1, a, b2), 0);
    Partition part;
    for (const detail::Fan& f : fans)
        part.pieces.push_back({WeaklySimplePolygon{detail::fan_walk(f)}, f.center});
    part.meta.method = "dp";
    return part;
}

// Best-effort cleanup: a zero-area piece whose walk lies inside another
// piece's closed region adds nothing and is absorbed. A minimal partition
// never contains such a piece, but truncated candidate sets can produce one.
inline void simplify_pieces(Partition& part) {
    for (std::size_t i = part.pieces.size(); i-- > 0;) {
        const std::vector<Point>& w = part.pieces[i].boundary.pts;
        if (signed_area(w) != 0) continue;
        for (std::size_t j = 0; j < part.pieces.size(); j++) {
            if (j == i) continue;
            const std::vector<Point>& host = part.pieces[j].boundary.pts;
            if (host.size() < 3) continue;
            bool swallowed = true;
            for (std::size_t e = 0; e < w.size() && swallowed; e++) {
                Segment s{w[e], w[(e + 1) % w.size()]};
                if (region_contains(host, s.a) == Location::Exterior ||
                    region_contains(host, s.midpoint()) == Location::Exterior)
                    swallowed = false;
            }
            if (swallowed) {
                part.pieces.erase(part.pieces.begin() + static_cast<std::ptrdiff_t>(i));
                break;
            }
        }
    }
}

inline std::pair<std::size_t, Partition> dp_partition(const Polygon& P, const CandidateSets& sets,
                                                      DpOptions opts = {}) {
    DpContext ctx = make_dp_context(P, sets, opts);
    auto [b1, b2] = dp_seed(P, ctx.sets);
    std::vector<Point> starts;
    for (const Point& a : ctx.sets.s_cen) {
        if (!sees_segment(P.pts, a, Segment{b1, b2})) continue;
        dp_discover(ctx, short_key(b1, a, b2));
        starts.push_back(a);
    }
    if (starts.empty()) throw GeomError("dp: no candidate center sees the seed segment");
    dp_relax(ctx);
    const Point* best = nullptr;
    std::size_t bv = 0;
    for (const Point& a : starts) {
        std::size_t v = ctx.memo.at(short_key(b1, a, b2)).value;
        if (!best || v < bv) {
            best = &a;
            bv = v;
        }
    }
    if (bv >= P.size())
        throw GeomError("dp: no feasible partition from the candidate sets");
    Partition part = dp_reconstruct(ctx, b1, *best, b2);
    if (part.pieces.size() != bv + 1) throw GeomError("dp: piece count mismatch");
    if (opts.simplify_pieces) simplify_pieces(part);
    return {part.pieces.size(), part};
}

// Minimum piece count plus every candidate center that can start some
// minimum partition by seeing the seed stretch b1 -> b2 (b2 the clockwise
// neighbor of b1 in s_bor). One dp cache serves all seeds; k = 0 flags that
// no partition exists from the candidate sets.
inline std::pair<std::size_t, std::vector<Point>> optimal_prefix(const Polygon& P,
                                                                 const CandidateSets& sets,
                                                                 const Point& b1, const Point& b2,
                                                                 DpOptions opts = {}) {
    DpContext ctx = make_dp_context(P, sets, opts);
    if (!ctx.bor_key.count(b1) || !ctx.bor_key.count(b2))
        throw GeomError("dp: seed endpoint not in s_bor");
    std::vector<Point> starts;
    for (const Point& a : ctx.sets.s_cen) {
        if (!sees_segment(P.pts, a, Segment{b1, b2})) continue;
        dp_discover(ctx, short_key(b1, a, b2));
        starts.push_back(a);
    }
    if (starts.empty()) return {0, {}};
    dp_relax(ctx);
    std::size_t bv = static_cast<std::size_t>(-1);
    for (const Point& a : starts)
        bv = std::min(bv, ctx.memo.at(short_key(b1, a, b2)).value);
    if (bv >= P.size()) return {0, {}};
    std::vector<Point> out;
    for (const Point& a : starts)
        if (ctx.memo.at(short_key(b1, a, b2)).value == bv) out.push_back(a);
    return {bv + 1, out};
}

inline std::vector<Point> optimal_prefix_centers(const Polygon& P, const CandidateSets& sets,
                                                 const Point& b1, const Point& b2,
                                                 DpOptions opts = {}) {
    return optimal_prefix(P, sets, b1, b2, opts).second;
}

}  // namespace starpart
