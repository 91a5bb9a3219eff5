#pragma once

#include "surfdraw/arrangement.hpp"
#include "surfdraw/parallel.hpp"
#include "surfdraw/rotation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace surfdraw {

struct EnumClass {
    ClassId id;
    int multiplicity = 0;
    RotationSystem representative;
};

struct EnumerationResult {
    int examined = 0;
    int genus1_cellular = 0;
    int passing_filter = 0;
    std::vector<EnumClass> classes;  // sorted by code
    Convention convention;
};

// All cyclic orders of {0..n-1}: first element pinned, (n-1)! lists.
inline std::vector<std::vector<int>> cyclic_orders(int n) {
    std::vector<int> rest;
    for (int i = 1; i < n; ++i) rest.push_back(i);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> ord{0};
        ord.insert(ord.end(), rest.begin(), rest.end());
        out.push_back(ord);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

inline RotationSystem k24_system(const std::vector<int>& rot_a1, const std::vector<int>& rot_a2) {
    RotationSystem rs;
    rs.m = 2;
    rs.n = 4;
    rs.rot_a = {rot_a1, rot_a2};
    rs.rot_b.assign(4, {0, 1});
    return rs;
}

inline bool has_all_b_walk(const RotationFaces& rf, int n) {
    for (auto& walk : rf.walks) {
        std::vector<char> seen(n, 0);
        for (auto& [part, v] : walk)
            if (part == Part::B) seen[v] = 1;
        bool all = true;
        for (char c : seen) all &= c != 0;
        if (all) return true;
    }
    return false;
}

// All 36 rotation systems of K_{2,4} (cyclic orders at a1 and a2); keep the
// genus-1 ones whose face structure has a walk through every b vertex, and
// classify the survivors.
inline EnumerationResult enumerate_k24_torus(const Convention& conv, int jobs = 1) {
    EnumerationResult res;
    res.convention = conv;
    auto orders = cyclic_orders(4);
    struct Row {
        bool genus1 = false;
        bool passes = false;
        ClassId id;
        RotationSystem rs;
    };
    int total = static_cast<int>(orders.size() * orders.size());
    std::vector<Row> rows = parallel_map<Row>(total, jobs, [&](int idx) {
        Row row;
        const auto& o1 = orders[idx / orders.size()];
        const auto& o2 = orders[idx % orders.size()];
        row.rs = k24_system(o1, o2);
        RotationFaces rf = faces_of_rotation(row.rs);
        long long chi = 2 + 4 - 8 + rf.count;
        row.genus1 = chi == 0;
        if (!row.genus1) return row;
        row.passes = has_all_b_walk(rf, 4);
        if (row.passes) row.id = canonical_code(row.rs, conv);
        return row;
    });
    res.examined = total;
    std::map<std::string, EnumClass> by_code;
    for (auto& row : rows) {
        if (row.genus1) ++res.genus1_cellular;
        if (!row.passes) continue;
        ++res.passing_filter;
        auto it = by_code.find(row.id.code);
        if (it == by_code.end())
            by_code[row.id.code] = EnumClass{row.id, 1, row.rs};
        else
            ++it->second.multiplicity;
    }
    for (auto& [code, cls] : by_code) res.classes.push_back(cls);
    return res;
}

inline int count_chiral_pairs(const EnumerationResult& oriented) {
    // Chiral classes pair up under reflection; count pairs.
    int chiral = 0;
    for (auto& c : oriented.classes) chiral += c.id.chiral ? 1 : 0;
    return chiral / 2;
}

struct EnumSummary {
    EnumerationResult selected;
    int oriented_classes = 0;
    int reflective_classes = 0;
    int chiral_pairs = 0;
};

inline EnumSummary enumerate_summary(LabelScheme labels, bool reflective_selected,
                                     int jobs = 1) {
    Convention oc{false, labels}, rc{true, labels};
    EnumerationResult ores = enumerate_k24_torus(oc, jobs);
    EnumerationResult rres = enumerate_k24_torus(rc, jobs);
    EnumSummary s;
    s.oriented_classes = static_cast<int>(ores.classes.size());
    s.reflective_classes = static_cast<int>(rres.classes.size());
    s.chiral_pairs = count_chiral_pairs(ores);
    s.selected = reflective_selected ? std::move(rres) : std::move(ores);
    return s;
}

struct ClassifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline ClassId classify_drawing(const Drawing& d, const Convention& conv) {
    if (d.surface.kind != SurfaceKind::torus)
        throw ClassifyError("classify: drawing not on the torus");
    if (d.part_count(Part::A) != 2 || d.part_count(Part::B) != 4 || !d.complete_bipartite())
        throw ClassifyError("classify: drawing is not a complete K_{2,4}");
    return canonical_code(rotation_system_of(d), conv);
}

// ---------------------------------------------------------------------------
// Fixture audit: transcribed drawings, each tagged with its class label or
// "not-included"; the induced partition must reproduce the labels exactly.
// ---------------------------------------------------------------------------

struct AuditFixture {
    std::string name;
    std::string label;  // "not-included" or a class tag, "sym" prefix for mirrors
    Drawing drawing;
};

struct AuditReport {
    int classified = 0;
    int filtered = 0;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

inline AuditReport fixture_audit(const std::vector<AuditFixture>& corpus,
                                 const Convention& conv) {
    AuditReport rep;
    struct Entry {
        const AuditFixture* fx;
        ClassId oriented;
        ClassId reflective;
    };
    std::vector<Entry> included;
    for (auto& fx : corpus) {
        ValidationReport v = validate(fx.drawing);
        if (!v.ok()) {
            rep.mismatches.push_back(fx.name + ": invalid drawing");
            continue;
        }
        if (!v.crossings.empty()) {
            rep.mismatches.push_back(fx.name + ": has crossings");
            continue;
        }
        bool has_all_b = !all_b_faces(fx.drawing).empty();
        bool excluded = fx.label == "not-included";
        if (excluded != !has_all_b) {
            rep.mismatches.push_back(fx.name + ": all-b face " +
                                     (has_all_b ? "present" : "absent") +
                                     " but label says " + fx.label);
            continue;
        }
        if (excluded) {
            ++rep.filtered;
            continue;
        }
        Convention oc = conv;
        oc.reflective = false;
        Convention rc = conv;
        rc.reflective = true;
        Entry en{&fx, classify_drawing(fx.drawing, oc), classify_drawing(fx.drawing, rc)};
        included.push_back(en);
        ++rep.classified;
    }
    // Same label => same oriented class; distinct labels => distinct classes,
    // except a label and its sym partner, which are bound by the mirror
    // relation below (an achiral class makes that relation an equality).
    auto sym_partners = [](const std::string& x, const std::string& y) {
        return x == "sym" + y || y == "sym" + x;
    };
    for (std::size_t i = 0; i < included.size(); ++i) {
        for (std::size_t j = i + 1; j < included.size(); ++j) {
            bool same_label = included[i].fx->label == included[j].fx->label;
            bool same_class = included[i].oriented == included[j].oriented;
            if (same_label && !same_class)
                rep.mismatches.push_back(included[i].fx->name + " vs " + included[j].fx->name +
                                         ": same label " + included[i].fx->label +
                                         " but distinct classes");
            if (!same_label && same_class &&
                !sym_partners(included[i].fx->label, included[j].fx->label))
                rep.mismatches.push_back(included[i].fx->name + " vs " + included[j].fx->name +
                                         ": labels " + included[i].fx->label + "/" +
                                         included[j].fx->label + " but equal classes");
        }
    }
    // "sym X" fixtures carry the mirror class of the "X" fixtures: equal
    // reflective class, and the mirror of one oriented class is the other.
    std::map<std::string, const Entry*> rep_of_label;
    for (auto& en : included) rep_of_label[en.fx->label] = &en;
    for (auto& [label, en] : rep_of_label) {
        if (label.rfind("sym", 0) != 0) continue;
        std::string base = label.substr(3);
        auto it = rep_of_label.find(base);
        if (it == rep_of_label.end()) continue;
        const Entry* be = it->second;
        if (!(en->reflective == be->reflective))
            rep.mismatches.push_back(label + " and " + base + " not mirror-related");
        Convention oc = conv;
        oc.reflective = false;
        ClassId mirrored = mirror_code(rotation_system_of(en->fx->drawing), oc);
        if (!(mirrored.code == be->oriented.code))
            rep.mismatches.push_back(label + ": mirror does not land in class " + base);
    }
    std::sort(rep.mismatches.begin(), rep.mismatches.end());
    return rep;
}

inline std::string audit_to_text(const AuditReport& rep) {
    std::ostringstream out;
    out << rep.classified << " classified, " << rep.filtered
        << " filtered (no all-b face), " << rep.mismatches.size() << " mismatches\n";
    for (auto& m : rep.mismatches) out << "mismatch: " << m << "\n";
    return out.str();
}

inline std::string enumeration_to_text(const EnumSummary& s) {
    const EnumerationResult& res = s.selected;
    std::ostringstream out;
    out << "examined: " << res.examined << "\n";
    out << "genus-1: " << res.genus1_cellular << "\n";
    out << "passing all-b filter: " << res.passing_filter << "\n";
    out << "classes: " << res.classes.size() << "\n";
    out << "oriented classes: " << s.oriented_classes << "\n";
    out << "reflective classes: " << s.reflective_classes << "\n";
    out << "chiral pairs: " << s.chiral_pairs << "\n";
    for (auto& c : res.classes) {
        out << "class " << code_hash(c.id.code) << " chiral=" << (c.id.chiral ? "yes" : "no")
            << " mult=" << c.multiplicity << " rep=a1:(";
        for (std::size_t i = 0; i < c.representative.rot_a[0].size(); ++i)
            out << (i ? " " : "") << "b" << c.representative.rot_a[0][i] + 1;
        out << ")|a2:(";
        for (std::size_t i = 0; i < c.representative.rot_a[1].size(); ++i)
            out << (i ? " " : "") << "b" << c.representative.rot_a[1][i] + 1;
        out << ")\n";
    }
    return out.str();
}

}  // namespace surfdraw
