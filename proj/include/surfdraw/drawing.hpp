#pragma once

#include "surfdraw/rational.hpp"
#include "surfdraw/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfdraw {

enum class Part { A, B };

struct VertexId {
    Part part = Part::A;
    int index = 0;  // 1-based, as in a1, b3

    bool operator==(const VertexId& o) const { return part == o.part && index == o.index; }
    bool operator<(const VertexId& o) const {
        if (part != o.part) return part == Part::A;
        return index < o.index;
    }
    std::string name() const {
        return (part == Part::A ? "a" : "b") + std::to_string(index);
    }
};

// An edge curve between a part-A and part-B vertex: a chain of polyline arcs
// inside the rectangle, consecutive arcs joined by a side transit.
struct EdgeCurve {
    VertexId u;  // part A
    VertexId v;  // part B
    std::vector<std::vector<Pt>> arcs;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct Drawing {
    SurfaceSpec surface;
    std::vector<std::pair<VertexId, Pt>> vertices;  // canonical points
    std::vector<EdgeCurve> edges;

    const Pt* vertex_point(const VertexId& id) const {
        for (auto& [vid, p] : vertices)
            if (vid == id) return &p;
        return nullptr;
    }
    int part_count(Part part) const {
        int n = 0;
        for (auto& [vid, p] : vertices)
            if (vid.part == part) ++n;
        return n;
    }
    // Indices within a part are arbitrary positive ints; collect them sorted.
    std::vector<VertexId> part_vertices(Part part) const {
        std::vector<VertexId> out;
        for (auto& [vid, p] : vertices)
            if (vid.part == part) out.push_back(vid);
        std::sort(out.begin(), out.end());
        return out;
    }
    bool complete_bipartite() const {
        auto as = part_vertices(Part::A), bs = part_vertices(Part::B);
        if (edges.size() != as.size() * bs.size()) return false;
        std::map<std::pair<int, int>, int> seen;
        for (auto& e : edges) ++seen[{e.u.index, e.v.index}];
        for (auto& a : as)
            for (auto& b : bs)
                if (seen[{a.index, b.index}] != 1) return false;
        return true;
    }
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

inline VertexId parse_vertex_name(const std::string& name, int line) {
    if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
        throw ParseError(line, "bad vertex name '" + name + "' (want a<k> or b<k>)");
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(name[i])))
            throw ParseError(line, "bad vertex name '" + name + "'");
    int idx = std::stoi(name.substr(1));
    if (idx <= 0) throw ParseError(line, "vertex index must be positive in '" + name + "'");
    return VertexId{name[0] == 'a' ? Part::A : Part::B, idx};
}

inline Rat parse_rat_or_throw(const std::string& tok, int line) {
    auto r = parse_rat(tok);
    if (!r) throw ParseError(line, "malformed rational '" + tok + "'");
    return *r;
}

inline Pt parse_point(const std::string& tok, int line) {
    auto comma = tok.find(',');
    if (comma == std::string::npos) throw ParseError(line, "bad point '" + tok + "' (want x,y)");
    return Pt{parse_rat_or_throw(tok.substr(0, comma), line),
              parse_rat_or_throw(tok.substr(comma + 1), line)};
}

}  // namespace detail

// Structural parse only; geometric validity is the validator's job.
inline Drawing parse_drawing(const std::string& text) {
    using namespace detail;
    Drawing d;
    bool have_surface = false, have_rect = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "surface") {
            if (toks.size() != 2) throw ParseError(lineno, "surface wants one token");
            if (toks[1] == "torus")
                d.surface.kind = SurfaceKind::torus;
            else if (toks[1] == "klein")
                d.surface.kind = SurfaceKind::klein;
            else
                throw ParseError(lineno, "unknown surface kind '" + toks[1] + "'");
            have_surface = true;
        } else if (kw == "rect") {
            if (toks.size() != 3) throw ParseError(lineno, "rect wants W H");
            d.surface.W = parse_rat_or_throw(toks[1], lineno);
            d.surface.H = parse_rat_or_throw(toks[2], lineno);
            if (!d.surface.valid()) throw ParseError(lineno, "rect dimensions must be positive");
            have_rect = true;
        } else if (kw == "vertex") {
            if (!have_surface || !have_rect)
                throw ParseError(lineno, "vertex before surface/rect");
            if (toks.size() != 5) throw ParseError(lineno, "vertex wants: name part x y");
            VertexId id = parse_vertex_name(toks[1], lineno);
            Part declared = toks[2] == "A" ? Part::A : Part::B;
            if ((toks[2] != "A" && toks[2] != "B") || declared != id.part)
                throw ParseError(lineno, "vertex part does not match name '" + toks[1] + "'");
            Pt p{parse_rat_or_throw(toks[3], lineno), parse_rat_or_throw(toks[4], lineno)};
            if (!d.surface.in_rect(p))
                throw ParseError(lineno, "vertex outside the rectangle");
            p = identify(p, d.surface);
            if (d.vertex_point(id)) throw ParseError(lineno, "duplicate vertex " + id.name());
            d.vertices.emplace_back(id, p);
        } else if (kw == "edge") {
            if (toks.size() < 5 || toks[3] != ":")
                throw ParseError(lineno, "edge wants: a<i> b<j> : points...");
            EdgeCurve e;
            e.u = parse_vertex_name(toks[1], lineno);
            e.v = parse_vertex_name(toks[2], lineno);
            if (e.u.part != Part::A || e.v.part != Part::B)
                throw ParseError(lineno, "edge endpoints must be a<i> then b<j>");
            const Pt* up = d.vertex_point(e.u);
            const Pt* vp = d.vertex_point(e.v);
            if (!up) throw ParseError(lineno, "edge references unknown vertex " + e.u.name());
            if (!vp) throw ParseError(lineno, "edge references unknown vertex " + e.v.name());
            std::vector<Pt> arc;
            for (std::size_t i = 4; i < toks.size(); ++i) {
                if (toks[i] == "|") {
                    if (arc.size() < 2) throw ParseError(lineno, "arc needs at least 2 points");
                    e.arcs.push_back(std::move(arc));
                    arc.clear();
                    continue;
                }
                Pt p = detail::parse_point(toks[i], lineno);
                if (!d.surface.in_rect(p)) throw ParseError(lineno, "edge point outside rectangle");
                arc.push_back(p);
            }
            if (arc.size() < 2) throw ParseError(lineno, "arc needs at least 2 points");
            e.arcs.push_back(std::move(arc));
            // Curve ends must land on representatives of the declared vertices.
            auto is_rep = [&](const Pt& p, const Pt& canon) {
                return identify(p, d.surface) == canon;
            };
            if (!is_rep(e.arcs.front().front(), *up) || !is_rep(e.arcs.back().back(), *vp))
                throw ParseError(lineno, "edge endpoint not matching any vertex representative");
            d.edges.push_back(std::move(e));
        } else {
            throw ParseError(lineno, "unknown declaration '" + kw + "'");
        }
    }
    if (!have_surface || !have_rect) throw ParseError(lineno, "missing surface or rect");
    return d;
}

// Canonical text form: vertices in part-then-index order, edges sorted by
// (A-index, B-index), rationals in lowest terms. parse(serialize(d)) == d.
inline std::string serialize_drawing(const Drawing& d) {
    std::ostringstream out;
    out << "surface " << (d.surface.kind == SurfaceKind::torus ? "torus" : "klein") << "\n";
    out << "rect " << rat_to_string(d.surface.W) << " " << rat_to_string(d.surface.H) << "\n";
    auto verts = d.vertices;
    std::sort(verts.begin(), verts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [id, p] : verts)
        out << "vertex " << id.name() << " " << (id.part == Part::A ? "A" : "B") << " "
            << rat_to_string(p.x) << " " << rat_to_string(p.y) << "\n";
    auto edges = d.edges;
    std::sort(edges.begin(), edges.end(), [](const EdgeCurve& a, const EdgeCurve& b) {
        if (a.u.index != b.u.index) return a.u.index < b.u.index;
        return b.v.index > a.v.index;
    });
    for (auto& e : edges) {
        out << "edge " << e.u.name() << " " << e.v.name() << " :";
        for (std::size_t t = 0; t < e.arcs.size(); ++t) {
            if (t > 0) out << " |";
            for (auto& p : e.arcs[t]) out << " " << pt_to_string(p);
        }
        out << "\n";
    }
    return out.str();
}

inline bool drawings_equal(const Drawing& a, const Drawing& b) {
    return serialize_drawing(a) == serialize_drawing(b);
}

}  // namespace surfdraw
