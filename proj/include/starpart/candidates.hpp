#pragma once

#include <map>
#include <set>

#include "starpart/partition.hpp"
#include "starpart/visibility.hpp"

namespace starpart {

struct ResourceLimitError : GeomError {
    using GeomError::GeomError;
};

struct CandidateCaps {
    std::size_t max_cen = SIZE_MAX;
    std::size_t max_int = SIZE_MAX;
    bool heuristic = false;  // truncate by priority instead of failing
};

struct CandidateSets {
    std::vector<Point> s_cen;  // potential star centers
    std::vector<Point> s_bor;  // potential piece corners on the boundary
    std::vector<Point> s_int;  // potential piece corners anywhere in P
    std::map<Point, std::string, LexLess> provenance;
    bool capped = false;
};

// corners plus, per edge, the endpoints of its maximal in-P extension
inline std::vector<Point> canonical_points(const Polygon& P) {
    std::set<Point, LexLess> out(P.pts.begin(), P.pts.end());
    for (std::size_t i = 0; i < P.size(); i++) {
        Segment ext = extension(P, P.edge(i));
        out.insert(ext.a);
        out.insert(ext.b);
    }
    return {out.begin(), out.end()};
}

// all corner-pair lines plus the three point-support lines of each tripod
inline std::vector<Line> construction_lines(const Polygon& P,
                                            const std::vector<FakeTripod>& tripods) {
    std::set<Line> lines;
    for (std::size_t i = 0; i < P.size(); i++)
        for (std::size_t j = i + 1; j < P.size(); j++)
            lines.insert(Line::through(P.corner(i), P.corner(j)));
    for (const FakeTripod& t : tripods)
        for (std::size_t s : t.supports)
            if (!(P.corner(s) == t.point)) lines.insert(Line::through(t.point, P.corner(s)));
    return {lines.begin(), lines.end()};
}

// pairwise intersections of the lines, kept if they land in P
inline std::vector<Point> center_candidates(const Polygon& P, const std::vector<Line>& lines) {
    std::set<Point, LexLess> out;
    for (std::size_t i = 0; i < lines.size(); i++)
        for (std::size_t j = i + 1; j < lines.size(); j++)
            if (auto p = line_intersection(lines[i], lines[j]))
                if (point_location(P, *p) != Location::Exterior) out.insert(*p);
    return {out.begin(), out.end()};
}

// Boundary and interior Steiner candidates generated from the star centers:
//   L1 = center-corner lines, L2 = center-center lines,
//   S3 = L1 x L1 intersections, L3 = center-S3 lines,
//   S1 = edge hits of L1 u L2, S2 = (L1 u L2) x (L1 u L2 u L3) intersections.
// s_bor = corners u S1 (u boundary points of S2, S3); s_int adds S2 and S3.
inline CandidateSets steiner_candidates(const Polygon& P, const std::vector<Point>& s_cen,
                                        const CandidateCaps& caps = {}) {
    if (s_cen.empty()) throw GeomError("steiner_candidates: no star center candidates");

    std::set<Line> l1, l2;
    for (const Point& c : s_cen) {
        for (std::size_t v = 0; v < P.size(); v++)
            if (!(P.corner(v) == c)) l1.insert(Line::through(c, P.corner(v)));
        for (const Point& d : s_cen)
            if (lex_less(c, d)) l2.insert(Line::through(c, d));
    }
    std::vector<Line> l12(l1.begin(), l1.end());
    for (const Line& l : l2)
        if (!l1.count(l)) l12.push_back(l);

    std::set<Point, LexLess> s3;
    {
        std::vector<Line> v1(l1.begin(), l1.end());
        for (std::size_t i = 0; i < v1.size(); i++)
            for (std::size_t j = i + 1; j < v1.size(); j++)
                if (auto p = line_intersection(v1[i], v1[j])) s3.insert(*p);
    }
    std::set<Line> l3;
    for (const Point& c : s_cen)
        for (const Point& s : s3)
            if (!(c == s)) l3.insert(Line::through(c, s));

    std::set<Point, LexLess> s1;
    for (std::size_t e = 0; e < P.size(); e++) {
        Segment seg = P.edge(e);
        Line el = Line::through(seg.a, seg.b);
        for (const Line& l : l12)
            if (auto p = line_intersection(el, l))
                if (on_segment(*p, seg)) s1.insert(*p);
    }

    CandidateSets cs;
    cs.s_cen = s_cen;
    std::sort(cs.s_cen.begin(), cs.s_cen.end(), lex_less);

    // assemble s_int in provenance priority order so capping drops the deep
    // S2 products first and never the corners or centers
    std::set<Point, LexLess> in_int;
    bool full = false;
    auto try_add = [&](const Point& q, const char* tag) {
        if (full || point_location(P, q) == Location::Exterior) return;
        if (in_int.size() >= caps.max_int && !in_int.count(q)) {
            if (!caps.heuristic)
                throw ResourceLimitError("steiner_candidates: s_int exceeds the cap");
            cs.capped = true;
            full = true;
            return;
        }
        if (in_int.insert(q).second) cs.provenance.emplace(q, tag);
    };
    for (const Point& q : P.pts) try_add(q, "corner");
    for (const Point& q : cs.s_cen) try_add(q, "center");
    for (const Point& q : s1) try_add(q, "edge-hit");
    for (const Point& q : s3) try_add(q, "center-corner-pair");

    // S2 last: the deep product of line families
    std::vector<Line> l123 = l12;
    for (const Line& l : l3)
        if (!l1.count(l) && !l2.count(l)) l123.push_back(l);
    for (std::size_t i = 0; i < l12.size() && !full; i++)
        for (std::size_t j = 0; j < l123.size() && !full; j++) {
            if (l123[j] == l12[i]) continue;
            if (auto p = line_intersection(l12[i], l123[j])) try_add(*p, "line-pair");
        }
    cs.s_int.assign(in_int.begin(), in_int.end());

    for (const Point& q : cs.s_int)
        if (point_location(P, q) == Location::Boundary) cs.s_bor.push_back(q);
    return cs;
}

// full pipeline: corner-pair + tripod lines -> centers -> Steiner sets
inline CandidateSets candidate_sets(const Polygon& P, const std::vector<FakeTripod>& tripods,
                                    const CandidateCaps& caps = {}) {
    std::vector<Line> corner_lines = construction_lines(P, {});
    std::vector<Point> cen = center_candidates(P, corner_lines);
    if (!tripods.empty()) {
        // tripod lines have lower retention priority than corner-pair products
        std::set<Point, LexLess> base(cen.begin(), cen.end());
        std::vector<Point> extra;
        for (const Point& q : center_candidates(P, construction_lines(P, tripods)))
            if (!base.count(q)) extra.push_back(q);
        cen.insert(cen.end(), extra.begin(), extra.end());
    }
    bool cen_capped = false;
    if (cen.size() > caps.max_cen) {
        if (!caps.heuristic) throw ResourceLimitError("candidate_sets: s_cen exceeds the cap");
        cen.resize(caps.max_cen);
        cen_capped = true;
    }
    std::sort(cen.begin(), cen.end(), lex_less);
    CandidateSets cs = steiner_candidates(P, cen, caps);
    cs.capped |= cen_capped;
    return cs;
}

}  // namespace starpart
