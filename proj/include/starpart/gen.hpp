#pragma once

// Deterministic instance generators for tests and the CLI. Coordinates are
// always exact rationals; the random family derives everything from the seed
// so corpora are reproducible across runs and machines.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "starpart/polygon.hpp"

namespace starpart {

// Strictly convex m-gon: tangent-half-angle points of a rational circle,
// CCW, rotated to start at the lexicographically smallest corner. No three
// corners are collinear because they all lie on one circle.
inline Polygon gen_convex(std::size_t m, const Rational& radius = Rational(12)) {
    if (m < 3) throw GeomError("gen_convex: need at least 3 corners");
    std::vector<Point> pts;
    for (std::size_t j = 0; j < m; j++) {
        Rational t(2 * static_cast<long long>(j) - static_cast<long long>(m - 1),
                   static_cast<long long>(m));
        Rational t2 = t * t;
        pts.push_back({radius * (1 - t2) / (1 + t2), radius * 2 * t / (1 + t2)});
    }
    std::rotate(pts.begin(), std::min_element(pts.begin(), pts.end(), lex_less), pts.end());
    return Polygon{std::move(pts)};
}

// L-shape: unit kernel square at the origin, one concave corner at (1,1).
inline Polygon gen_lshape() {
    return Polygon{{{Rational(0), Rational(0)},
                    {Rational(2), Rational(0)},
                    {Rational(2), Rational(1)},
                    {Rational(1), Rational(1)},
                    {Rational(1), Rational(2)},
                    {Rational(0), Rational(2)}}};
}

// Axis-aligned comb with k unit-wide teeth over a base strip of height 1;
// gap floors at y = 1. 4k corners, needs exactly k star pieces.
inline Polygon gen_comb(std::size_t k) {
    if (k < 1) throw GeomError("gen_comb: need at least one tooth");
    std::vector<Point> pts;
    long long w = 2 * static_cast<long long>(k) - 1;
    auto pt = [](long long x, long long y) { return Point{Rational(x), Rational(y)}; };
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
    return Polygon{std::move(pts)};
}

// Flat corridor with two interleaved pairs of thin roof spikes. The inner
// pair's tips are covisible only from a small pocket high in the corridor
// (around (5, 13/20)); the outer pair's only from a low pocket near the
// floor (around (5, 1/8)). The pockets are disjoint, so no single star piece
// owns all four tips. The cheapest split hangs both inner spikes from a
// boundary polyline bending at the high pocket — an interior point off every
// corner — so corner-only boundary candidates force a third piece: the only
// corners below the roof line are the floor ends, and chords to those either
// disconnect the remainder or mix the spike pairs. The parameter scales all
// coordinates; instances are similar copies.
inline Polygon gen_spikes(long long scale = 1) {
    if (scale < 1) throw GeomError("gen_spikes: scale must be positive");
    auto pt = [scale](long long xn, long long xd, long long yn, long long yd) {
        return Point{Rational(xn * scale, xd), Rational(yn * scale, yd)};
    };
    return Polygon{{pt(0, 1, 0, 1), pt(10, 1, 0, 1), pt(10, 1, 1, 1),
                    pt(7, 1, 1, 1),  pt(8, 1, 3, 2), pt(27, 4, 1, 1),   // right outer spike
                    pt(21, 4, 1, 1), pt(23, 4, 2, 1), pt(41, 8, 1, 1),  // right inner spike
                    pt(39, 8, 1, 1), pt(17, 4, 2, 1), pt(19, 4, 1, 1),  // left inner spike
                    pt(13, 4, 1, 1), pt(2, 1, 3, 2), pt(3, 1, 1, 1),    // left outer spike
                    pt(0, 1, 1, 1)}};
}

// Star centers pinned by gen_spikes(scale): the high and low pocket points,
// then one center per side wedge for the corner-only three-piece split.
inline std::vector<Point> spikes_centers(long long scale = 1) {
    if (scale < 1) throw GeomError("gen_spikes: scale must be positive");
    auto pt = [scale](long long xn, long long xd, long long yn, long long yd) {
        return Point{Rational(xn * scale, xd), Rational(yn * scale, yd)};
    };
    return {pt(5, 1, 13, 20), pt(5, 1, 1, 8), pt(13, 4, 9, 10), pt(27, 4, 9, 10)};
}

// Random simple polygon on n distinct integer points: order the points by
// angle around their average, then untangle with 2-opt. Reversing the
// subpath between two properly crossing edges strictly shortens the tour
// (triangle inequality, strict for a transversal crossing), so the loop
// terminates without computing any lengths. Degenerate outcomes — straight
// corners surviving, touching edges — restart with a salted seed.
inline Polygon gen_random_polygon(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw GeomError("gen_random_polygon: need at least 3 corners");
    for (std::uint64_t attempt = 0; attempt < 64; attempt++) {
        std::mt19937_64 rng(seed + attempt * 0x9e3779b97f4a7c15ULL);
        long long box = 4 * static_cast<long long>(n);
        std::uniform_int_distribution<long long> coord(0, box);
        std::set<std::pair<long long, long long>> used;
        while (used.size() < n) used.insert({coord(rng), coord(rng)});
        std::vector<Point> pts;
        Point sum{Rational(0), Rational(0)};
        for (const auto& [x, y] : used) {
            pts.push_back({Rational(x), Rational(y)});
            sum = sum + pts.back();
        }
        std::shuffle(pts.begin(), pts.end(), rng);
        Point cent{sum.x / static_cast<long long>(n), sum.y / static_cast<long long>(n)};
        std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
            if (a == cent) return b != cent;
            if (b == cent) return false;
            Point u = a - cent, v = b - cent;
            if (ccw_dir_less(u, v)) return true;
            if (ccw_dir_less(v, u)) return false;
            return lex_less(a, b);
        });

        bool tangled = true;
        std::size_t guard = 0;
        while (tangled && ++guard < 20000) {
            tangled = false;
            for (std::size_t i = 0; i < n && !tangled; i++) {
                for (std::size_t j = i + 1; j < n && !tangled; j++) {
                    Segment ei{pts[i], pts[(i + 1) % n]};
                    Segment ej{pts[j], pts[(j + 1) % n]};
                    if (!properly_cross(ei, ej)) continue;
                    std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                 pts.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    tangled = true;
                }
            }
        }
        if (guard >= 20000) continue;

        try {
            NormalizeResult res = normalize_polygon(pts);
            if (res.polygon.size() != n) continue;  // straight corners were dropped
            return std::move(res.polygon);
        } catch (const GeomError&) {
            continue;  // touching edges or collinear overlaps; retry
        }
    }
    throw GeomError("gen_random_polygon: no simple polygon after 64 attempts");
}

}  // namespace starpart