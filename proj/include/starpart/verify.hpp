#pragma once

// Independent partition checker and the tripod structure report. The checker
// shares no code with any partition builder: it certifies a piece list
// against the input polygon by first principles (containment, star shape
// from the stored center, no transversal boundary crossings, exact area
// accounting). Builders are trusted only as far as this lets them be.

#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "starpart/partition.hpp"
#include "starpart/visibility.hpp"

namespace starpart {

struct Violation {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t piece;  // npos when the whole partition is at fault
    std::string rule;   // containment | center-outside | not-star | crossing | orientation | area | malformed
    Segment witness;
};

struct Report {
    bool ok = true;
    std::vector<Violation> violations;
};

// Certifies part as a star partition of P. Pieces may be weakly simple and
// may have zero area (doubled spikes); piece edges may touch and overlap but
// never properly cross anything. Containment of every piece edge plus the
// exact area identity sum |piece| = |P| pins the pieces as an interior-
// disjoint tiling of P; visibility from the center to every corner and every
// edge midpoint, tested inside the piece itself, pins each piece as star.
inline Report verify_partition(const Polygon& P, const Partition& part) {
    Report rep;
    auto flag = [&](std::size_t i, const char* rule, const Segment& w) {
        rep.violations.push_back({i, rule, w});
        rep.ok = false;
    };
    Rational total(0);
    for (std::size_t i = 0; i < part.pieces.size(); i++) {
        const std::vector<Point>& w = part.pieces[i].boundary.pts;
        const Point& c = part.pieces[i].center;
        // A 2-corner walk is a doubled segment: a legitimate zero-area spike
        // piece. Anything smaller carries no geometry at all.
        if (w.size() < 2) {
            flag(i, "malformed", Segment{c, c});
            continue;
        }
        Rational a = signed_area(w);
        if (a < 0) flag(i, "orientation", Segment{w[0], w[1]});
        total += abs(a);
        std::size_t n = w.size();
        for (std::size_t j = 0; j < n; j++) {
            Segment e{w[j], w[(j + 1) % n]};
            if (!segment_in_region(P.pts, e)) flag(i, "containment", e);
        }
        if (auto cross_at = find_proper_self_crossing(w))
            flag(i, "crossing", Segment{w[cross_at->first], w[cross_at->second]});
        if (region_contains(w, c) == Location::Exterior) {
            flag(i, "center-outside", Segment{c, c});
            continue;
        }
        for (std::size_t j = 0; j < n; j++) {
            if (!segment_in_region(w, Segment{c, w[j]}))
                flag(i, "not-star", Segment{c, w[j]});
            Segment e{w[j], w[(j + 1) % n]};
            if (e.degenerate()) continue;
            Point m{(e.a.x + e.b.x) / 2, (e.a.y + e.b.y) / 2};
            if (!segment_in_region(w, Segment{c, m}))
                flag(i, "not-star", Segment{c, m});
        }
    }
    for (std::size_t i = 0; i < part.pieces.size(); i++) {
        for (std::size_t j = i + 1; j < part.pieces.size(); j++) {
            const auto& wi = part.pieces[i].boundary.pts;
            const auto& wj = part.pieces[j].boundary.pts;
            bool hit = false;
            for (std::size_t a_ = 0; a_ < wi.size() && !hit; a_++) {
                Segment ea{wi[a_], wi[(a_ + 1) % wi.size()]};
                for (std::size_t b_ = 0; b_ < wj.size() && !hit; b_++) {
                    Segment eb{wj[b_], wj[(b_ + 1) % wj.size()]};
                    if (!properly_cross(ea, eb)) continue;
                    Point x = segment_intersection(ea, eb).p;
                    flag(i, "crossing", Segment{x, x});
                    hit = true;
                }
            }
        }
    }
    if (total != abs(polygon_area(P)))
        flag(Violation::npos, "area", Segment{P.corner(0), P.corner(0)});
    return rep;
}

// Bipartite incidence structure of a partition: tripod points (interior
// points where exactly three pieces meet with strictly convex corners)
// versus faces (groups of pieces glued along shared boundary that is not a
// tripod leg). For partitions produced by the tripod decomposition this is
// a tree rooted at the face covering the polygon's first edge.
struct TripodTree {
    struct Tripod {
        Point at;
        std::array<std::size_t, 3> pieces;
        std::array<Segment, 3> legs;   // from the tripod point outward, CCW
        std::size_t parent_face = 0;   // neighbor face on the path to the root
    };
    std::vector<std::vector<std::size_t>> faces;  // piece indices per face
    std::vector<Tripod> tripods;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (face, tripod)
    std::size_t root = 0;
};

// Throws GeomError when the meeting pattern cannot be classified (four or
// more pieces cornered at one interior point) or when the incidence graph is
// not a tree; callers treat that as "no tripod structure", not as a crash.
inline TripodTree extract_tripod_tree(const Polygon& P, const Partition& part) {
    std::size_t np = part.pieces.size();
    std::vector<std::vector<Point>> walks(np);
    for (std::size_t i = 0; i < np; i++)
        walks[i] = detail::clean_walk(part.pieces[i].boundary.pts);

    struct Entry {
        std::size_t piece;
        Point prev, next;
    };
    std::map<Point, std::vector<Entry>, LexLess> meets;
    for (std::size_t i = 0; i < np; i++) {
        std::size_t n = walks[i].size();
        for (std::size_t j = 0; j < n; j++)
            meets[walks[i][j]].push_back(
                {i, walks[i][(j + n - 1) % n], walks[i][(j + 1) % n]});
    }

    TripodTree tree;
    std::set<std::pair<std::size_t, std::size_t>> leg_separated;
    auto same_dir = [](const Point& u, const Point& v) {
        return cross(u, v) == 0 && dot(u, v) > 0;
    };
    for (const auto& [q, entries] : meets) {
        if (point_location(P, q) != Location::Interior) continue;
        if (entries.size() < 3) continue;
        if (entries.size() > 3)
            throw GeomError("extract_tripod_tree: more than three pieces corner at an interior point");
        if (entries[0].piece == entries[1].piece || entries[0].piece == entries[2].piece ||
            entries[1].piece == entries[2].piece)
            continue;  // one piece folding back through q; not a tripod
        bool convex = true;
        for (const Entry& e : entries)
            if (orient_sign(e.prev, q, e.next) <= 0) convex = false;
        if (!convex) continue;

        // the six incident directions must pair across pieces into three legs
        std::array<Segment, 3> legs;
        bool paired = true;
        std::size_t leg_n = 0;
        for (std::size_t a_ = 0; a_ < 3 && paired; a_++) {
            for (std::size_t b_ = a_ + 1; b_ < 3; b_++) {
                const Point pa[2] = {entries[a_].next, entries[a_].prev};
                const Point pb[2] = {entries[b_].next, entries[b_].prev};
                bool found = false;
                for (const Point& x : pa) {
                    for (const Point& y : pb) {
                        if (!same_dir(x - q, y - q)) continue;
                        // shared stretch reaches to the nearer endpoint
                        Point end = dot(x - q, x - q) <= dot(y - q, y - q) ? x : y;
                        if (leg_n < 3) legs[leg_n++] = Segment{q, end};
                        found = true;
                        break;
                    }
                    if (found) break;
                }
                if (!found) paired = false;
            }
        }
        if (!paired || leg_n != 3) continue;
        std::sort(legs.begin(), legs.end(), [&](const Segment& s1, const Segment& s2) {
            return ccw_dir_less(s1.b - q, s2.b - q);
        });
        std::array<std::size_t, 3> ps{entries[0].piece, entries[1].piece, entries[2].piece};
        std::sort(ps.begin(), ps.end());
        for (std::size_t a_ = 0; a_ < 3; a_++)
            for (std::size_t b_ = a_ + 1; b_ < 3; b_++)
                leg_separated.insert({ps[a_], ps[b_]});
        tree.tripods.push_back({q, ps, legs, 0});
    }

    // faces: union pieces sharing positive-length boundary, except across legs
    std::vector<std::size_t> uf(np);
    std::iota(uf.begin(), uf.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto share_boundary = [&](std::size_t i, std::size_t j) {
        for (std::size_t a_ = 0; a_ < walks[i].size(); a_++) {
            Segment ea{walks[i][a_], walks[i][(a_ + 1) % walks[i].size()]};
            for (std::size_t b_ = 0; b_ < walks[j].size(); b_++) {
                Segment eb{walks[j][b_], walks[j][(b_ + 1) % walks[j].size()]};
                auto inter = segment_intersection(ea, eb);
                if (inter.kind == SegmentIntersection::Kind::Overlap &&
                    inter.range.a != inter.range.b)
                    return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < np; i++)
        for (std::size_t j = i + 1; j < np; j++) {
            if (leg_separated.count({i, j})) continue;
            if (share_boundary(i, j)) uf[find(i)] = find(j);
        }
    std::map<std::size_t, std::size_t> face_id;
    std::vector<std::size_t> face_of(np);
    for (std::size_t i = 0; i < np; i++) {
        std::size_t r = find(i);
        auto [it, fresh] = face_id.try_emplace(r, tree.faces.size());
        if (fresh) tree.faces.emplace_back();
        face_of[i] = it->second;
        tree.faces[it->second].push_back(i);
    }

    for (std::size_t t = 0; t < tree.tripods.size(); t++) {
        const auto& ps = tree.tripods[t].pieces;
        std::set<std::size_t> fs{face_of[ps[0]], face_of[ps[1]], face_of[ps[2]]};
        if (fs.size() != 3)
            throw GeomError("extract_tripod_tree: tripod legs do not separate its pieces");
        for (std::size_t f : fs) tree.edges.emplace_back(f, t);
    }

    std::size_t nf = tree.faces.size(), nt = tree.tripods.size();
    std::vector<std::vector<std::size_t>> adj_f(nf), adj_t(nt);
    for (const auto& [f, t] : tree.edges) {
        adj_f[f].push_back(t);
        adj_t[t].push_back(f);
    }
    if (tree.edges.size() + 1 != nf + nt)
        throw GeomError("extract_tripod_tree: tripod incidence graph is not a tree");

    Segment first{P.corner(0), P.corner(1)};
    std::size_t root_piece = Violation::npos;
    for (std::size_t i = 0; i < np && root_piece == Violation::npos; i++)
        for (std::size_t a_ = 0; a_ < walks[i].size(); a_++) {
            Segment ea{walks[i][a_], walks[i][(a_ + 1) % walks[i].size()]};
            auto inter = segment_intersection(ea, first);
            if (inter.kind == SegmentIntersection::Kind::Overlap &&
                inter.range.a != inter.range.b &&
                (inter.range.a == P.corner(0) || inter.range.b == P.corner(0))) {
                root_piece = i;
                break;
            }
        }
    if (root_piece == Violation::npos)
        throw GeomError("extract_tripod_tree: no piece borders the first edge");
    tree.root = face_of[root_piece];

    // orient every tripod toward the root by breadth-first search
    std::vector<int> seen_f(nf, 0), seen_t(nt, 0);
    std::queue<std::size_t> bfs;  // faces only; tripods expand in between
    bfs.push(tree.root);
    seen_f[tree.root] = 1;
    std::size_t reached = 1;
    while (!bfs.empty()) {
        std::size_t f = bfs.front();
        bfs.pop();
        for (std::size_t t : adj_f[f]) {
            if (seen_t[t]) continue;
            seen_t[t] = 1;
            tree.tripods[t].parent_face = f;
            for (std::size_t g : adj_t[t])
                if (!seen_f[g]) {
                    seen_f[g] = 1;
                    reached++;
                    bfs.push(g);
                }
        }
    }
    if (reached != nf)
        throw GeomError("extract_tripod_tree: tripod incidence graph is not a tree");
    return tree;
}

}  // namespace starpart