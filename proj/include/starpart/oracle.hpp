#pragma once

// Exhaustive reference for tiny instances. Two assembly strategies back it.
// Peeling: pick a region, pick an unused center inside it, carve out its
// visibility region as one star piece, and recurse on the pockets left
// behind. Peeling only ever emits whole visibility regions, so it misses
// optima whose pieces are leaner fans — with mutually covisible centers the
// first peel swallows every other center's spot — and there the fallback
// takes over: a piece owning one boundary arc, closed back through at most
// one bend drawn from the candidate points, recursing on the complement.
// Every center subset of every size up to k_max is tried in order, and any
// assembled tiling must still pass the independent checker, so the result is
// the exact minimum over tilings either strategy can express. Intended for a
// dozen-odd corners and a dozen candidate centers; anything bigger throws
// instead of silently burning hours.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "starpart/candidates.hpp"
#include "starpart/verify.hpp"

namespace starpart {

namespace detail {

inline bool assemble_regions(std::vector<std::vector<Point>> regions,
                             const std::vector<Point>& centers,
                             std::vector<StarPiece>& pieces) {
    if (regions.empty()) return centers.empty();
    if (centers.empty()) return false;
    std::vector<Point> region = std::move(regions.back());
    regions.pop_back();
    for (std::size_t i = 0; i < centers.size(); i++) {
        const Point& c = centers[i];
        if (region_contains(region, c) == Location::Exterior) continue;
        VisibilitySplit split = visibility_split(region, c);
        if (split.visible.empty()) continue;
        std::vector<std::vector<Point>> rest = regions;
        for (auto& p : split.pockets) rest.push_back(std::move(p));
        std::vector<Point> remaining = centers;
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
        pieces.push_back({WeaklySimplePolygon{split.visible}, c});
        if (assemble_regions(std::move(rest), remaining, pieces)) return true;
        pieces.pop_back();
    }
    return false;
}

// Star spot-check matching verify_partition: the center reaches every corner
// and every edge midpoint without leaving the walk.
inline bool star_about(const std::vector<Point>& walk, const Point& c) {
    if (walk.size() < 3) return false;
    if (region_contains(walk, c) == Location::Exterior) return false;
    std::size_t n = walk.size();
    for (std::size_t j = 0; j < n; j++) {
        if (!segment_in_region(walk, Segment{c, walk[j]})) return false;
        Segment e{walk[j], walk[(j + 1) % n]};
        if (e.degenerate()) continue;
        Point m{(e.a.x + e.b.x) / 2, (e.a.y + e.b.y) / 2};
        if (!segment_in_region(walk, Segment{c, m})) return false;
    }
    return true;
}

// Fallback assembly. A chunk is the counterclockwise boundary arc between two
// candidate anchors plus the polyline closing it, bent at most once at a
// candidate point; the chunk owning the region's first corner is carved first
// and the complement recurses with the remaining centers. Junky chunk shapes
// die here on containment, area, or the star check — and whatever survives is
// still re-verified by the caller.
inline bool assemble_chunks(const std::vector<Point>& region,
                            const std::vector<Point>& centers,
                            const std::vector<Point>& anchors,
                            const std::vector<Point>& bends,
                            std::vector<StarPiece>& pieces) {
    if (centers.size() == 1) {
        if (!star_about(region, centers[0])) return false;
        pieces.push_back({WeaklySimplePolygon{region}, centers[0]});
        return true;
    }
    std::vector<Point> div;
    for (const Point& q : anchors)
        if (boundary_position(region, q) &&
            std::find(div.begin(), div.end(), q) == div.end())
            div.push_back(q);
    if (div.size() > 48)
        throw ResourceLimitError("brute_force_min_partition: anchor set too large");
    for (std::size_t ci = 0; ci < centers.size(); ci++) {
        const Point& c = centers[ci];
        std::vector<Point> rest_centers = centers;
        rest_centers.erase(rest_centers.begin() + static_cast<std::ptrdiff_t>(ci));
        for (const Point& u : div) {
            for (const Point& v : div) {
                if (u == v) continue;
                std::vector<Point> arc = boundary_arc(region, u, v);
                if (std::find(arc.begin(), arc.end(), region[0]) == arc.end()) continue;
                std::vector<Point> back = boundary_arc(region, v, u);
                for (std::size_t bi = 0; bi <= bends.size(); bi++) {
                    std::vector<Point> walk = arc;
                    std::vector<Point> rest = back;
                    if (bi < bends.size()) {
                        const Point& z = bends[bi];
                        if (std::find(arc.begin(), arc.end(), z) != arc.end()) continue;
                        if (!segment_in_region(region, Segment{v, z})) continue;
                        if (!segment_in_region(region, Segment{z, u})) continue;
                        walk.push_back(z);
                        rest.push_back(z);
                    } else {
                        if (!segment_in_region(region, Segment{v, u})) continue;
                    }
                    if (signed_area(walk) <= 0 || signed_area(rest) <= 0) continue;
                    if (find_proper_self_crossing(walk)) continue;
                    if (!star_about(walk, c)) continue;
                    pieces.push_back({WeaklySimplePolygon{walk}, c});
                    if (assemble_chunks(rest, rest_centers, anchors, bends, pieces))
                        return true;
                    pieces.pop_back();
                }
            }
        }
    }
    return false;
}

inline bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            idx[i]++;
            for (std::size_t j = i + 1; j < k; j++) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Minimum number of star pieces assembled from centers in s_cen, or nullopt
// when no subset of size <= k_max tiles P. Peeling is tried first, the arc
// chunk walk only when it fails, so certificates stay stable where peeling
// suffices. Every found tiling is re-checked by verify_partition and must
// cover all of s_bor and s_int (those points belong to P, so a tiling that
// misses one is a bug worth throwing over). The optional certificate receives
// the minimal partition itself.
inline std::optional<std::size_t> brute_force_min_partition(
    const Polygon& P, const std::vector<Point>& s_cen,
    const std::vector<Point>& s_bor, const std::vector<Point>& s_int,
    std::size_t k_max, Partition* certificate = nullptr) {
    if (s_cen.size() > 12)
        throw ResourceLimitError("brute_force_min_partition: more than 12 candidate centers");
    if (k_max > 4)
        throw ResourceLimitError("brute_force_min_partition: k_max beyond exhaustive range");
    std::vector<Point> anchors = s_bor;
    anchors.insert(anchors.end(), s_int.begin(), s_int.end());
    anchors.insert(anchors.end(), s_cen.begin(), s_cen.end());
    std::vector<Point> bends = s_int;
    bends.insert(bends.end(), s_cen.begin(), s_cen.end());
    for (std::size_t k = 1; k <= std::min(k_max, s_cen.size()); k++) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        do {
            std::vector<Point> centers;
            centers.reserve(k);
            for (std::size_t i : idx) centers.push_back(s_cen[i]);
            std::vector<StarPiece> pieces;
            bool assembled = detail::assemble_regions({P.pts}, centers, pieces);
            if (!assembled) {
                pieces.clear();
                assembled = detail::assemble_chunks(P.pts, centers, anchors, bends, pieces);
            }
            if (!assembled) continue;
            Partition part{std::move(pieces), {"brute-force", ""}};
            if (!verify_partition(P, part).ok) continue;
            auto covered = [&](const Point& q) {
                for (const StarPiece& sp : part.pieces)
                    if (region_contains(sp.boundary.pts, q) != Location::Exterior) return true;
                return false;
            };
            for (const Point& q : s_bor)
                if (!covered(q)) throw GeomError("brute_force_min_partition: boundary candidate escaped the tiling");
            for (const Point& q : s_int)
                if (!covered(q)) throw GeomError("brute_force_min_partition: interior candidate escaped the tiling");
            if (certificate) *certificate = std::move(part);
            return k;
        } while (detail::next_subset(idx, s_cen.size()));
    }
    return std::nullopt;
}

}  // namespace starpart