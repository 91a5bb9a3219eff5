#pragma once

#include "surfdraw/drawing.hpp"
#include "surfdraw/surface_isect.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace surfdraw {

struct Issue {
    std::string code;
    int edge_a = -1, seg_a = -1;
    int edge_b = -1, seg_b = -1;
    std::string detail;

    bool operator<(const Issue& o) const {
        auto key = [](const Issue& i) {
            return std::tuple(i.edge_a, i.seg_a, i.edge_b, i.seg_b, i.code, i.detail);
        };
        return key(*this) < key(o);
    }
};

struct CrossingRecord {
    int e = 0, f = 0;  // edge indices, e < f
    Pt point{};        // canonical

    bool operator<(const CrossingRecord& o) const {
        return std::tuple(e, f, point) < std::tuple(o.e, o.f, o.point);
    }
};

struct ValidationReport {
    std::vector<Issue> errors;
    std::vector<Issue> warnings;
    std::vector<CrossingRecord> crossings;

    bool ok() const { return errors.empty(); }
    int crossing_total() const { return static_cast<int>(crossings.size()); }

    // Aggregated inventory: (edge e, edge f) -> count, e < f.
    std::map<std::pair<int, int>, int> inventory() const {
        std::map<std::pair<int, int>, int> inv;
        for (auto& c : crossings) ++inv[{c.e, c.f}];
        return inv;
    }
};

namespace detail {

inline void add_issue(std::vector<Issue>& out, std::string code, int ea, int sa, int eb, int sb,
                      std::string detail = "") {
    out.push_back(Issue{std::move(code), ea, sa, eb, sb, std::move(detail)});
}

// Side of a non-corner boundary point; nullopt for interior or corner.
inline std::optional<Side> side_of(const Pt& p, const SurfaceSpec& s) {
    if (s.is_corner(p)) return std::nullopt;
    if (p.x == 0) return Side::left;
    if (p.x == s.W) return Side::right;
    if (p.y == 0) return Side::bottom;
    if (p.y == s.H) return Side::top;
    return std::nullopt;
}

}  // namespace detail

// Geometric validation: general position, transit consistency, simplicity.
// Adjacent-edge crossings (edges sharing a vertex) are warnings, not errors.
inline ValidationReport validate(const Drawing& d) {
    using detail::add_issue;
    ValidationReport rep;
    const SurfaceSpec& s = d.surface;

    if (!s.valid()) {
        add_issue(rep.errors, "bad-surface", -1, -1, -1, -1, "nonpositive rectangle");
        return rep;
    }

    // Vertex points pairwise distinct.
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < d.vertices.size(); ++j)
            if (d.vertices[i].second == d.vertices[j].second)
                add_issue(rep.errors, "duplicate-vertex-point", -1, -1, -1, -1,
                          d.vertices[i].first.name() + " and " + d.vertices[j].first.name());

    // Duplicate edges.
    std::map<std::pair<int, int>, int> edge_seen;
    for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
        auto key = std::make_pair(d.edges[ei].u.index, d.edges[ei].v.index);
        if (edge_seen.count(key))
            add_issue(rep.errors, "duplicate-edge", static_cast<int>(ei), -1, edge_seen[key], -1,
                      d.edges[ei].u.name() + "-" + d.edges[ei].v.name());
        else
            edge_seen[key] = static_cast<int>(ei);
    }

    std::vector<FlatCurve> flats;
    flats.reserve(d.edges.size());
    for (auto& e : d.edges) flats.push_back(flatten_curve(e));

    // Per-edge structural checks.
    for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
        const EdgeCurve& e = d.edges[ei];
        int eidx = static_cast<int>(ei);
        int flat_k = 0;
        for (std::size_t t = 0; t < e.arcs.size(); ++t) {
            const auto& arc = e.arcs[t];
            for (std::size_t i = 0; i + 1 < arc.size(); ++i, ++flat_k)
                if (arc[i] == arc[i + 1])
                    add_issue(rep.errors, "zero-length-segment", eidx, flat_k, -1, -1);
            // Bends stay off the rectangle boundary.
            for (std::size_t i = 1; i + 1 < arc.size(); ++i)
                if (s.on_boundary(arc[i]))
                    add_issue(rep.errors, "bend-on-boundary", eidx, -1, -1, -1,
                              "arc " + std::to_string(t) + " point " + pt_to_string(arc[i]));
            if (t + 1 < e.arcs.size()) {
                const Pt& end = arc.back();
                const Pt& start = e.arcs[t + 1].front();
                auto side = detail::side_of(end, s);
                if (!s.on_boundary(end) || !s.on_boundary(start) || !side ||
                    transit(end, *side, s) != start)
                    add_issue(rep.errors, "bad-transit", eidx, -1, -1, -1,
                              "arcs " + std::to_string(t) + "/" + std::to_string(t + 1));
            }
        }
    }
    if (!rep.errors.empty()) {
        std::sort(rep.errors.begin(), rep.errors.end());
        return rep;  // geometry below assumes structural sanity
    }

    // Vertex-versus-edge incidence: edge interiors avoid every vertex point.
    for (std::size_t vi = 0; vi < d.vertices.size(); ++vi) {
        const auto& [vid, vp] = d.vertices[vi];
        auto reps = representatives(vp, s);
        for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
            const EdgeCurve& e = d.edges[ei];
            bool incident = e.u == vid || e.v == vid;
            for (std::size_t k = 0; k < flats[ei].segs.size(); ++k) {
                const CurveSeg& cs = flats[ei].segs[k];
                for (const Pt& r : reps) {
                    CurvePos pos = classify_on_curve(cs, r);
                    if (pos == CurvePos::off_curve) continue;
                    if (pos == CurvePos::curve_end && incident) continue;
                    add_issue(rep.errors, "edge-through-vertex", static_cast<int>(ei),
                              static_cast<int>(k), -1, -1, "vertex " + vid.name());
                }
            }
        }
    }

    // Self-intersection: each curve is simple on the surface.
    for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
        const FlatCurve& fc = flats[ei];
        for (const RawHit& h : surface_hits(fc, fc, s, true)) {
            if (h.ka >= h.kb) continue;  // unordered pairs once
            const CurveSeg& ca = fc.segs[h.ka];
            const CurveSeg& cb = fc.segs[h.kb];
            if (h.overlap) {
                add_issue(rep.errors, "degenerate-overlap", static_cast<int>(ei), h.ka,
                          static_cast<int>(ei), h.kb);
                continue;
            }
            bool consecutive = h.kb == h.ka + 1;
            if (consecutive) {
                // Shared joint (bend or transit) is the one permitted contact.
                CurvePos pa = classify_on_curve(ca, h.pa);
                CurvePos pb = classify_on_curve(cb, h.pb);
                if (h.pa == ca.seg.q && h.pb == cb.seg.p &&
                    (pa == CurvePos::bend || pa == CurvePos::transit_joint) && pa == pb)
                    continue;
            }
            // A closed attachment: first and last segment meeting at a shared
            // vertex would mean u and v coincide; caught by vertex checks.
            add_issue(rep.errors, "self-intersection", static_cast<int>(ei), h.ka,
                      static_cast<int>(ei), h.kb, pt_to_string(h.pa));
        }
    }

    // Pairwise edge contacts.
    std::set<std::tuple<int, int, Pt>> crossing_seen;
    std::map<Pt, std::set<int>> edges_at_point;
    for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
        for (std::size_t fi = ei + 1; fi < d.edges.size(); ++fi) {
            const EdgeCurve& e = d.edges[ei];
            const EdgeCurve& f = d.edges[fi];
            // Shared endpoints of the two edges (as canonical points).
            std::vector<Pt> shared;
            for (auto vid : {e.u, e.v})
                if (vid == f.u || vid == f.v) shared.push_back(*d.vertex_point(vid));
            for (const RawHit& h : surface_hits(flats[ei], flats[fi], s, false)) {
                int eidx = static_cast<int>(ei), fidx = static_cast<int>(fi);
                if (h.overlap) {
                    add_issue(rep.errors, "degenerate-overlap", eidx, h.ka, fidx, h.kb);
                    continue;
                }
                Pt canon = identify(h.pa, s);
                CurvePos pa = classify_on_curve(flats[ei].segs[h.ka], h.pa);
                CurvePos pb = classify_on_curve(flats[fi].segs[h.kb], h.pb);
                bool end_a = pa == CurvePos::curve_end;
                bool end_b = pb == CurvePos::curve_end;
                if (end_a && end_b) {
                    bool is_shared = false;
                    for (auto& sp : shared) is_shared |= sp == canon;
                    if (is_shared) continue;  // meeting at a common vertex
                    add_issue(rep.errors, "edge-through-vertex", eidx, h.ka, fidx, h.kb,
                              pt_to_string(canon));
                    continue;
                }
                if (end_a || end_b) {
                    // A curve end (vertex) in the other curve's interior is the
                    // vertex check's business; anything else is a tangency.
                    add_issue(rep.errors, "tangency", eidx, h.ka, fidx, h.kb,
                              pt_to_string(canon));
                    continue;
                }
                if (pa != CurvePos::seg_interior || pb != CurvePos::seg_interior) {
                    add_issue(rep.errors, "tangency", eidx, h.ka, fidx, h.kb,
                              pt_to_string(canon));
                    continue;
                }
                if (s.on_boundary(h.pa) || s.on_boundary(h.pb)) {
                    add_issue(rep.errors, "boundary-crossing", eidx, h.ka, fidx, h.kb,
                              pt_to_string(canon));
                    continue;
                }
                if (!crossing_seen.insert({eidx, fidx, canon}).second) continue;
                rep.crossings.push_back(CrossingRecord{eidx, fidx, canon});
                edges_at_point[canon].insert(eidx);
                edges_at_point[canon].insert(fidx);
                bool adjacent = e.u == f.u || e.v == f.v;
                if (adjacent)
                    add_issue(rep.warnings, "adjacent-crossing", eidx, h.ka, fidx, h.kb,
                              pt_to_string(canon));
            }
        }
    }

    for (auto& [pt, at] : edges_at_point)
        if (at.size() > 2)
            add_issue(rep.errors, "triple-point", *at.begin(), -1, -1, -1, pt_to_string(pt));

    std::sort(rep.errors.begin(), rep.errors.end());
    std::sort(rep.warnings.begin(), rep.warnings.end());
    std::sort(rep.crossings.begin(), rep.crossings.end());
    return rep;
}

inline std::string report_to_text(const ValidationReport& rep, const Drawing& d) {
    std::ostringstream out;
    out << (rep.ok() ? "valid: yes" : "valid: no") << "\n";
    out << "crossings: " << rep.crossing_total() << "\n";
    for (auto& [pair, n] : rep.inventory()) {
        out << "  " << d.edges[pair.first].u.name() << d.edges[pair.first].v.name() << " x "
            << d.edges[pair.second].u.name() << d.edges[pair.second].v.name() << ": " << n
            << "\n";
    }
    auto edge_tag = [&](int e, int k) {
        std::string t = e >= 0 ? d.edges[e].u.name() + d.edges[e].v.name() : std::string("-");
        if (k >= 0) t += "[" + std::to_string(k) + "]";
        return t;
    };
    for (auto& e : rep.errors) {
        out << "error " << e.code << " " << edge_tag(e.edge_a, e.seg_a) << " "
            << edge_tag(e.edge_b, e.seg_b);
        if (!e.detail.empty()) out << " " << e.detail;
        out << "\n";
    }
    for (auto& w : rep.warnings) {
        out << "warning " << w.code << " " << edge_tag(w.edge_a, w.seg_a) << " "
            << edge_tag(w.edge_b, w.seg_b);
        if (!w.detail.empty()) out << " " << w.detail;
        out << "\n";
    }
    return out.str();
}

}  // namespace surfdraw
