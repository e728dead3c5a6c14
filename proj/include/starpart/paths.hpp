#pragma once

#include <array>
#include <map>
#include <optional>
#include <queue>

#include "starpart/fisk.hpp"
#include "starpart/visibility.hpp"

namespace starpart {

// geodesic polyline: consecutive vertices see each other, interior vertices
// are concave corners of the ambient polygon
struct Chain {
    std::vector<Point> vertices;

    std::size_t links() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

inline std::vector<Rational> chain_sq_lengths(const Chain& c) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i + 1 < c.vertices.size(); i++) {
        Point d = c.vertices[i + 1] - c.vertices[i];
        out.push_back(dot(d, d));
    }
    return out;
}

// sign of sum(sqrt(a)) - sum(sqrt(b)) for nonnegative rational terms, exact:
// canonicalize each term to coeff*sqrt(squarefree) and, if anything is left,
// refine integer square roots until the error bound clears zero
inline int cmp_sqrt_sums(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::map<BigInt, Rational> coeff;  // radicand -> signed coefficient
    auto add = [&](const Rational& term, int sgn) {
        if (term < 0) throw GeomError("cmp_sqrt_sums: negative term");
        if (term == 0) return;
        BigInt n = rat_num(term) * rat_den(term);
        Rational c(1, rat_den(term));
        for (BigInt p = 2; p * p <= n && p < 1100; p++)
            while (n % (p * p) == 0) {
                n /= p * p;
                c *= p;
            }
        BigInt r = sqrt(n);
        if (r * r == n) {
            coeff[1] += sgn * c * r;
            return;
        }
        coeff[n] += sgn * c;
    };
    for (const Rational& t : a) add(t, 1);
    for (const Rational& t : b) add(t, -1);

    std::erase_if(coeff, [](const auto& kv) { return kv.second == 0; });
    if (coeff.empty()) return 0;
    if (coeff.size() == 1) return sign(coeff.begin()->second);

    BigInt den = 1;
    for (const auto& [m, c] : coeff) den *= rat_den(c);
    for (unsigned s = 32; s <= 1024; s *= 2) {
        BigInt scale = BigInt(1) << s;
        BigInt sum = 0, err = 0;
        for (const auto& [m, c] : coeff) {
            BigInt k = rat_num(c) * (den / rat_den(c));
            BigInt scaled = m * scale * scale;
            sum += k * sqrt(scaled);
            err += abs(k);  // floor-sqrt is off by < 1 at this scale
        }
        if (abs(sum) > err) return sum < 0 ? -1 : 1;
    }
    throw GeomError("cmp_sqrt_sums: comparison did not resolve");
}

namespace detail {

inline std::size_t containing_triangle(const Polygon& P, const Triangulation& T, const Point& p) {
    for (std::size_t t = 0; t < T.triangles.size(); t++) {
        const auto& tr = T.triangles[t];
        if (orient_sign(P.corner(tr[0]), P.corner(tr[1]), p) >= 0 &&
            orient_sign(P.corner(tr[1]), P.corner(tr[2]), p) >= 0 &&
            orient_sign(P.corner(tr[2]), P.corner(tr[0]), p) >= 0)
            return t;
    }
    throw GeomError("shortest_path: endpoint outside the polygon");
}

}  // namespace detail

// Euclidean geodesic between two points of P: funnel over the triangulation
// sleeve, restart variant, all predicates exact
inline Chain shortest_path(const Polygon& P, const Point& u, const Point& v) {
    if (point_location(P, u) == Location::Exterior || point_location(P, v) == Location::Exterior)
        throw GeomError("shortest_path: endpoint outside the polygon");
    if (u == v) return {{u}};
    if (sees(P, u, v)) return {{u, v}};

    Triangulation T = triangulate(P);
    std::size_t tu = detail::containing_triangle(P, T, u);
    std::size_t tv = detail::containing_triangle(P, T, v);

    std::vector<std::size_t> parent(T.triangles.size(), SIZE_MAX);
    std::queue<std::size_t> q;
    q.push(tu);
    parent[tu] = tu;
    while (!q.empty()) {
        std::size_t t = q.front();
        q.pop();
        if (t == tv) break;
        for (std::size_t w : T.dual[t])
            if (parent[w] == SIZE_MAX) {
                parent[w] = t;
                q.push(w);
            }
    }
    std::vector<std::size_t> sleeve{tv};
    while (sleeve.back() != tu) sleeve.push_back(parent[sleeve.back()]);
    std::reverse(sleeve.begin(), sleeve.end());

    // portals as (left, right) while walking the sleeve: crossing the CCW
    // directed edge a->b of the exited triangle puts b on the left
    std::vector<std::pair<Point, Point>> portal{{u, u}};
    for (std::size_t i = 0; i + 1 < sleeve.size(); i++) {
        const auto& cur = T.triangles[sleeve[i]];
        const auto& nxt = T.triangles[sleeve[i + 1]];
        bool found = false;
        for (int e = 0; e < 3 && !found; e++) {
            std::size_t x = cur[static_cast<std::size_t>(e)];
            std::size_t y = cur[static_cast<std::size_t>((e + 1) % 3)];
            int shared = 0;
            for (std::size_t z : nxt) shared += (z == x) + (z == y);
            if (shared == 2) {
                portal.emplace_back(P.corner(y), P.corner(x));
                found = true;
            }
        }
        if (!found) throw GeomError("shortest_path: broken sleeve");
    }
    portal.emplace_back(v, v);

    std::vector<Point> path{u};
    Point apex = u, left = u, right = u;
    std::size_t leftIdx = 0, rightIdx = 0;
    for (std::size_t i = 1; i < portal.size(); i++) {
        const Point& lp = portal[i].first;
        const Point& rp = portal[i].second;

        if (orient_sign(apex, right, rp) >= 0) {  // narrows the right side
            if (apex == right || orient_sign(apex, left, rp) <= 0) {
                right = rp;
                rightIdx = i;
            } else {  // swept past the left boundary: bend at left
                path.push_back(left);
                apex = left;
                left = right = apex;
                i = leftIdx;
                leftIdx = rightIdx = i;
                continue;
            }
        }
        if (orient_sign(apex, left, lp) <= 0) {  // narrows the left side
            if (apex == left || orient_sign(apex, right, lp) >= 0) {
                left = lp;
                leftIdx = i;
            } else {
                path.push_back(right);
                apex = right;
                left = right = apex;
                i = rightIdx;
                leftIdx = rightIdx = i;
                continue;
            }
        }
    }
    path.push_back(v);

    // drop collinear pass-throughs so interior vertices are genuine bends
    std::vector<Point> slim{path.front()};
    for (std::size_t i = 1; i + 1 < path.size(); i++) {
        if (path[i] == slim.back()) continue;
        if (orient_sign(slim.back(), path[i], path[i + 1]) == 0 &&
            dot(slim.back() - path[i], path[i + 1] - path[i]) <= 0)
            continue;
        slim.push_back(path[i]);
    }
    if (path.back() != slim.back()) slim.push_back(path.back());
    return {std::move(slim)};
}

// region bounded by the three support-to-support geodesics; absent when the
// sides share extra vertices or a tip fails to be strictly convex
struct PseudoTriangle {
    std::array<std::size_t, 3> supports;  // concave corner indices into P
    std::array<Chain, 3> sides;           // D1->D2, D2->D3, D3->D1
    std::vector<Point> walk;              // CCW boundary of the region
};

inline std::optional<PseudoTriangle> pseudo_triangle(const Polygon& P, std::size_t d1,
                                                     std::size_t d2, std::size_t d3) {
    for (std::size_t d : {d1, d2, d3})
        if (classify_corner(P, d) != CornerKind::Concave)
            throw GeomError("pseudo_triangle: support is not a concave corner");
    if (d1 == d2 || d2 == d3 || d1 == d3)
        throw GeomError("pseudo_triangle: supports must be distinct");

    PseudoTriangle pt;
    pt.supports = {d1, d2, d3};
    pt.sides[0] = shortest_path(P, P.corner(d1), P.corner(d2));
    pt.sides[1] = shortest_path(P, P.corner(d2), P.corner(d3));
    pt.sides[2] = shortest_path(P, P.corner(d3), P.corner(d1));

    // sides may meet only at the shared supports
    std::map<Point, int, LexLess> uses;
    for (const Chain& c : pt.sides)
        for (const Point& q : c.vertices) uses[q]++;
    for (const auto& [q, k] : uses) {
        bool support = q == P.corner(d1) || q == P.corner(d2) || q == P.corner(d3);
        if (support ? k != 2 : k != 1) return std::nullopt;
    }

    std::vector<Point> walk;
    for (const Chain& c : pt.sides)
        for (std::size_t i = 0; i + 1 < c.vertices.size(); i++) walk.push_back(c.vertices[i]);
    Rational area = signed_area(walk);
    if (area == 0) return std::nullopt;
    if (area < 0) std::reverse(walk.begin(), walk.end());

    // strictly convex tip at each support
    std::size_t m = walk.size();
    for (std::size_t i = 0; i < m; i++) {
        bool support = walk[i] == P.corner(d1) || walk[i] == P.corner(d2) || walk[i] == P.corner(d3);
        if (!support) continue;
        if (orient_sign(walk[(i + m - 1) % m], walk[i], walk[(i + 1) % m]) <= 0)
            return std::nullopt;
    }
    pt.walk = std::move(walk);
    return pt;
}

}  // namespace starpart
