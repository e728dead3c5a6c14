#pragma once

#include <array>
#include <map>
#include <queue>

#include "starpart/partition.hpp"

namespace starpart {

struct Triangulation {
    std::vector<std::array<std::size_t, 3>> triangles;  // corner indices, CCW
    std::vector<std::vector<std::size_t>> dual;         // triangles sharing a diagonal
};

// ear clipping, O(n^2)-ish with exact predicates; fine at our scale
inline Triangulation triangulate(const Polygon& P) {
    std::size_t n = P.size();
    std::vector<std::size_t> ring(n);
    for (std::size_t i = 0; i < n; i++) ring[i] = i;

    Triangulation T;
    auto is_ear = [&](std::size_t pos) {
        std::size_t m = ring.size();
        std::size_t a = ring[(pos + m - 1) % m], b = ring[pos], c = ring[(pos + 1) % m];
        if (orient_sign(P.corner(a), P.corner(b), P.corner(c)) <= 0) return false;
        for (std::size_t u : ring) {
            if (u == a || u == b || u == c) continue;
            const Point& p = P.corner(u);
            if (orient_sign(P.corner(a), P.corner(b), p) >= 0 &&
                orient_sign(P.corner(b), P.corner(c), p) >= 0 &&
                orient_sign(P.corner(c), P.corner(a), p) >= 0)
                return false;  // closed triangle: points on the boundary block too
        }
        return true;
    };

    while (ring.size() > 3) {
        std::size_t m = ring.size();
        std::size_t pos = m;
        for (std::size_t i = 0; i < m; i++)
            if (is_ear(i)) {
                pos = i;
                break;
            }
        if (pos == m) throw GeomError("triangulate: no ear found (polygon not simple?)");
        T.triangles.push_back({ring[(pos + m - 1) % m], ring[pos], ring[(pos + 1) % m]});
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    T.triangles.push_back({ring[0], ring[1], ring[2]});

    T.dual.assign(T.triangles.size(), {});
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> owner;
    for (std::size_t t = 0; t < T.triangles.size(); t++) {
        for (int e = 0; e < 3; e++) {
            std::size_t u = T.triangles[t][static_cast<std::size_t>(e)];
            std::size_t v = T.triangles[t][static_cast<std::size_t>((e + 1) % 3)];
            if (u > v) std::swap(u, v);
            auto [it, fresh] = owner.try_emplace({u, v}, t);
            if (!fresh) {
                T.dual[t].push_back(it->second);
                T.dual[it->second].push_back(t);
            }
        }
    }
    return T;
}

// 3-coloring of corners such that every triangle is tri-chromatic, spread
// from triangle 0 across the dual tree
inline std::vector<int> fisk_coloring(const Triangulation& T, std::size_t n) {
    std::vector<int> color(n, -1);
    if (T.triangles.empty()) return color;

    auto tri0 = T.triangles[0];
    std::sort(tri0.begin(), tri0.end());
    for (int c = 0; c < 3; c++) color[tri0[static_cast<std::size_t>(c)]] = c;

    std::vector<bool> done(T.triangles.size(), false);
    std::queue<std::size_t> q;
    q.push(0);
    done[0] = true;
    while (!q.empty()) {
        std::size_t t = q.front();
        q.pop();
        int used = 0;
        std::size_t blank = n;
        for (std::size_t v : T.triangles[t]) {
            if (color[v] < 0) blank = v;
            else used |= 1 << color[v];
        }
        if (blank != n) {
            switch (used) {
                case 0b110: color[blank] = 0; break;
                case 0b101: color[blank] = 1; break;
                case 0b011: color[blank] = 2; break;
                default: throw GeomError("fisk_coloring: dual propagation clash");
            }
        }
        for (std::size_t u : T.dual[t])
            if (!done[u]) {
                done[u] = true;
                q.push(u);
            }
    }
    return color;
}

// fans around the corners of the least-used color: at most floor(n/3) pieces
inline Partition avis_toussaint(const Polygon& P) {
    std::size_t n = P.size();
    Partition part;
    part.meta.method = "fisk";
    Triangulation T = triangulate(P);
    std::vector<int> color = fisk_coloring(T, n);
    std::array<std::size_t, 3> tally{0, 0, 0};
    for (int c : color) tally[static_cast<std::size_t>(c)]++;
    int c = 0;
    if (tally[1] < tally[static_cast<std::size_t>(c)]) c = 1;
    if (tally[2] < tally[static_cast<std::size_t>(c)]) c = 2;

    for (std::size_t v = 0; v < n; v++) {
        if (color[v] != c) continue;
        // the far edges of v's incident triangles chain into one arc
        std::map<std::size_t, std::size_t> next;
        for (const auto& tri : T.triangles) {
            for (int e = 0; e < 3; e++) {
                if (tri[static_cast<std::size_t>(e)] != v) continue;
                next[tri[static_cast<std::size_t>((e + 1) % 3)]] =
                    tri[static_cast<std::size_t>((e + 2) % 3)];
            }
        }
        // the arc's start is the one edge source that is no edge's target
        std::size_t start = n;
        std::vector<bool> is_target(n, false);
        for (const auto& [a, b] : next) is_target[b] = true;
        for (const auto& [a, b] : next)
            if (!is_target[a]) start = a;
        if (start == n) throw GeomError("avis_toussaint: fan does not chain");

        std::vector<Point> walk{P.corner(v), P.corner(start)};
        for (std::size_t cur = start; next.count(cur); cur = next[cur])
            walk.push_back(P.corner(next[cur]));
        part.pieces.push_back({WeaklySimplePolygon{std::move(walk)}, P.corner(v)});
    }
    return part;
}

}  // namespace starpart
