#pragma once

#include "surfdraw/drawing.hpp"
#include "surfdraw/validate.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace surfdraw {

// Transversal crossings between two edge curves of a validated drawing,
// from the report's deduplicated crossing set. Points canonical, sorted.
inline std::vector<Pt> edge_crossings(const ValidationReport& rep, int e, int f) {
    if (e > f) std::swap(e, f);
    std::vector<Pt> pts;
    for (auto& c : rep.crossings)
        if (c.e == e && c.f == f) pts.push_back(c.point);
    std::sort(pts.begin(), pts.end());
    return pts;
}

struct CrossingMatrix {
    std::vector<VertexId> labels;          // part-A vertices, ascending index
    std::vector<std::vector<long long>> a; // symmetric, nonnegative

    int size() const { return static_cast<int>(labels.size()); }
};

// Star-crossing matrix: entry (i,j), i != j, sums crossings between edges of
// a_i's star and edges of a_j's star; the diagonal counts crossing pairs
// within one star.
inline CrossingMatrix star_crossing_matrix(const Drawing& d, const ValidationReport& rep) {
    CrossingMatrix m;
    m.labels = d.part_vertices(Part::A);
    std::map<int, int> row;  // a-index -> row
    for (std::size_t i = 0; i < m.labels.size(); ++i) row[m.labels[i].index] = static_cast<int>(i);
    m.a.assign(m.labels.size(), std::vector<long long>(m.labels.size(), 0));
    for (auto& c : rep.crossings) {
        int i = row.at(d.edges[c.e].u.index);
        int j = row.at(d.edges[c.f].u.index);
        if (i == j)
            m.a[i][i] += 1;
        else {
            m.a[i][j] += 1;
            m.a[j][i] += 1;
        }
    }
    return m;
}

struct PatternMatch {
    std::vector<int> pair;    // two row indices (0-based), sorted
    std::vector<int> triple;  // three row indices, sorted

    bool operator<(const PatternMatch& o) const {
        return std::tie(pair, triple) < std::tie(o.pair, o.triple);
    }
    bool operator==(const PatternMatch& o) const {
        return pair == o.pair && triple == o.triple;
    }
};

struct PatternResult {
    std::vector<PatternMatch> matches;
    bool too_small = false;  // matrix smaller than 5x5
};

// All unordered (pair, triple) choices on 5-subsets realizing the forbidden
// pattern: entries touching the pair all zero, triple off-diagonal all one,
// diagonal over the subset zero.
inline PatternResult find_forbidden_pattern(const CrossingMatrix& m) {
    PatternResult res;
    int n = m.size();
    if (n < 5) {
        res.too_small = true;
        return res;
    }
    std::vector<int> sel;
    // Enumerate 5-subsets, then 2-subsets inside them as the pair.
    std::vector<int> idx(5);
    auto check = [&](const std::vector<int>& subset, const std::vector<int>& pair,
                     const std::vector<int>& triple) {
        for (int r : subset)
            if (m.a[r][r] != 0) return false;
        for (int p : pair)
            for (int q : subset)
                if (m.a[p][q] != 0 || m.a[q][p] != 0) return false;
        for (int i : triple)
            for (int j : triple)
                if (i != j && m.a[i][j] != 1) return false;
        return true;
    };
    std::vector<int> subset;
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            for (int x = 0; x < 5; ++x)
                for (int y = x + 1; y < 5; ++y) {
                    std::vector<int> pair{subset[x], subset[y]};
                    std::vector<int> triple;
                    for (int z = 0; z < 5; ++z)
                        if (z != x && z != y) triple.push_back(subset[z]);
                    if (check(subset, pair, triple))
                        res.matches.push_back(PatternMatch{pair, triple});
                }
            return;
        }
        for (int v = start; v <= m.size() - need; ++v) {
            subset.push_back(v);
            rec(v + 1, need - 1);
            subset.pop_back();
        }
    };
    rec(0, 5);
    std::sort(res.matches.begin(), res.matches.end());
    return res;
}

struct CertificateReport {
    bool verdict = false;
    std::vector<std::string> reasons;  // populated when verdict is false
    CrossingMatrix matrix;
    std::vector<PatternMatch> matches;
    ValidationReport validation;
    bool have_matrix = false;
};

// Verdict true iff: klein surface, complete bipartite with B-part of size 4,
// valid drawing, and the star matrix contains the forbidden pattern.
inline CertificateReport certify_counterexample(const Drawing& d) {
    CertificateReport cert;
    if (d.surface.kind != SurfaceKind::klein) cert.reasons.push_back("wrong-surface");
    if (!d.complete_bipartite()) cert.reasons.push_back("not-complete-bipartite");
    if (d.part_count(Part::B) != 4) cert.reasons.push_back("wrong-b-part-size");
    cert.validation = validate(d);
    if (!cert.validation.ok()) {
        cert.reasons.push_back("invalid-drawing");
        return cert;
    }
    cert.matrix = star_crossing_matrix(d, cert.validation);
    cert.have_matrix = true;
    PatternResult pr = find_forbidden_pattern(cert.matrix);
    cert.matches = pr.matches;
    if (cert.matches.empty()) cert.reasons.push_back("pattern-absent");
    cert.verdict = cert.reasons.empty();
    return cert;
}

inline std::string matrix_to_text(const CrossingMatrix& m) {
    std::ostringstream out;
    std::size_t w = 2;
    for (auto& l : m.labels) w = std::max(w, l.name().size());
    out << std::setw(static_cast<int>(w) + 2) << "";
    for (auto& l : m.labels) out << std::setw(static_cast<int>(w) + 1) << l.name();
    out << "\n";
    for (int i = 0; i < m.size(); ++i) {
        out << "  " << std::setw(static_cast<int>(w)) << m.labels[i].name();
        for (int j = 0; j < m.size(); ++j) out << std::setw(static_cast<int>(w) + 1) << m.a[i][j];
        out << "\n";
    }
    return out.str();
}

inline std::string certificate_to_text(const CertificateReport& c, const Drawing& d) {
    std::ostringstream out;
    out << "counterexample: " << (c.verdict ? "yes" : "no") << "\n";
    for (auto& r : c.reasons) out << "reason: " << r << "\n";
    if (c.have_matrix) {
        out << "star crossing matrix:\n" << matrix_to_text(c.matrix);
        for (auto& m : c.matches) {
            out << "witness pair {";
            for (std::size_t i = 0; i < m.pair.size(); ++i)
                out << (i ? "," : "") << c.matrix.labels[m.pair[i]].name();
            out << "} triple {";
            for (std::size_t i = 0; i < m.triple.size(); ++i)
                out << (i ? "," : "") << c.matrix.labels[m.triple[i]].name();
            out << "}\n";
        }
        out << "crossings: " << c.validation.crossing_total() << "\n";
        for (auto& [pair, n] : c.validation.inventory())
            out << "  " << d.edges[pair.first].u.name() << d.edges[pair.first].v.name() << " x "
                << d.edges[pair.second].u.name() << d.edges[pair.second].v.name() << ": " << n
                << "\n";
    }
    for (auto& w : c.validation.warnings) out << "warning " << w.code << " " << w.detail << "\n";
    return out.str();
}

}  // namespace surfdraw
