#pragma once

#include "surfdraw/drawing.hpp"
#include "surfdraw/validate.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfdraw {

struct RotationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cyclic dart orders of a bipartite graph: rot_a[i] lists b-indices around
// a_(i+1), rot_b[j] lists a-indices around b_(j+1); counter-clockwise.
struct RotationSystem {
    int m = 0, n = 0;  // |A|, |B|
    std::vector<std::vector<int>> rot_a;  // 0-based b indices
    std::vector<std::vector<int>> rot_b;  // 0-based a indices

    bool operator==(const RotationSystem& o) const {
        return m == o.m && n == o.n && rot_a == o.rot_a && rot_b == o.rot_b;
    }
};

// Angular dart order at each vertex of a crossing-free torus drawing.
inline RotationSystem rotation_system_of(const Drawing& d) {
    if (d.surface.kind != SurfaceKind::torus)
        throw RotationError("rotation system: drawing not on the torus");
    ValidationReport rep = validate(d);
    if (!rep.ok()) throw RotationError("rotation system: invalid drawing");
    if (!rep.crossings.empty()) throw RotationError("not-embedded: drawing has crossings");

    auto as = d.part_vertices(Part::A);
    auto bs = d.part_vertices(Part::B);
    std::map<int, int> arow, brow;
    for (std::size_t i = 0; i < as.size(); ++i) arow[as[i].index] = static_cast<int>(i);
    for (std::size_t j = 0; j < bs.size(); ++j) brow[bs[j].index] = static_cast<int>(j);

    struct Dart {
        Vec dir;
        int other;
    };
    std::vector<std::vector<Dart>> at_a(as.size()), at_b(bs.size());
    for (auto& e : d.edges) {
        const auto& first = e.arcs.front();
        const auto& last = e.arcs.back();
        Vec da = first[1] - first[0];
        Vec db = last[last.size() - 2] - last.back();
        at_a[arow.at(e.u.index)].push_back(Dart{da, brow.at(e.v.index)});
        at_b[brow.at(e.v.index)].push_back(Dart{db, arow.at(e.u.index)});
    }
    auto sort_ccw = [](std::vector<Dart>& darts) {
        std::sort(darts.begin(), darts.end(),
                  [](const Dart& x, const Dart& y) { return angle_less(x.dir, y.dir); });
    };
    RotationSystem rs;
    rs.m = static_cast<int>(as.size());
    rs.n = static_cast<int>(bs.size());
    rs.rot_a.resize(rs.m);
    rs.rot_b.resize(rs.n);
    for (int i = 0; i < rs.m; ++i) {
        sort_ccw(at_a[i]);
        for (auto& dart : at_a[i]) rs.rot_a[i].push_back(dart.other);
    }
    for (int j = 0; j < rs.n; ++j) {
        sort_ccw(at_b[j]);
        for (auto& dart : at_b[j]) rs.rot_b[j].push_back(dart.other);
    }
    return rs;
}

struct RotationFaces {
    int count = 0;
    // Each walk as an alternating vertex sequence a,b,a,b,... (0-based pairs
    // tagged by part), one entry per dart.
    std::vector<std::vector<std::pair<Part, int>>> walks;
};

// Face tracing by the next-dart rule: follow a dart, reverse it, and take the
// successor in the rotation at its head.
inline RotationFaces faces_of_rotation(const RotationSystem& rs) {
    // Darts: (a,b,0) = a->b, (a,b,1) = b->a.
    auto dart_id = [&](int a, int b, int down) { return (a * rs.n + b) * 2 + down; };
    std::vector<char> used(static_cast<std::size_t>(rs.m) * rs.n * 2, 0);
    std::vector<std::vector<int>> pos_a(rs.m, std::vector<int>(rs.n, -1));
    std::vector<std::vector<int>> pos_b(rs.n, std::vector<int>(rs.m, -1));
    for (int a = 0; a < rs.m; ++a)
        for (std::size_t k = 0; k < rs.rot_a[a].size(); ++k) pos_a[a][rs.rot_a[a][k]] = static_cast<int>(k);
    for (int b = 0; b < rs.n; ++b)
        for (std::size_t k = 0; k < rs.rot_b[b].size(); ++k) pos_b[b][rs.rot_b[b][k]] = static_cast<int>(k);

    RotationFaces rf;
    for (int a0 = 0; a0 < rs.m; ++a0) {
        for (int b0 : rs.rot_a[a0]) {
            for (int down0 : {0, 1}) {
                if (used[dart_id(a0, b0, down0)]) continue;
                std::vector<std::pair<Part, int>> walk;
                int a = a0, b = b0, down = down0;
                do {
                    used[dart_id(a, b, down)] = 1;
                    if (down == 0) {
                        // a -> b; the next dart leaves b one past (b -> a).
                        walk.push_back({Part::A, a});
                        int k = pos_b[b][a];
                        a = rs.rot_b[b][(k + 1) % rs.rot_b[b].size()];
                        down = 1;
                    } else {
                        walk.push_back({Part::B, b});
                        int k = pos_a[a][b];
                        int b2 = rs.rot_a[a][(k + 1) % rs.rot_a[a].size()];
                        b = b2;
                        down = 0;
                    }
                } while (!(a == a0 && b == b0 && down == down0));
                rf.walks.push_back(std::move(walk));
            }
        }
    }
    rf.count = static_cast<int>(rf.walks.size());
    return rf;
}

inline bool rotation_connected(const RotationSystem& rs) {
    if (rs.m == 0) return true;
    std::vector<char> seen_a(rs.m, 0), seen_b(rs.n, 0);
    std::vector<std::pair<Part, int>> stack{{Part::A, 0}};
    seen_a[0] = 1;
    while (!stack.empty()) {
        auto [part, v] = stack.back();
        stack.pop_back();
        if (part == Part::A)
            for (int b : rs.rot_a[v])
                if (!seen_b[b]) {
                    seen_b[b] = 1;
                    stack.push_back({Part::B, b});
                }
        if (part == Part::B)
            for (int a : rs.rot_b[v])
                if (!seen_a[a]) {
                    seen_a[a] = 1;
                    stack.push_back({Part::A, a});
                }
    }
    for (char c : seen_a)
        if (!c) return false;
    for (char c : seen_b)
        if (!c) return false;
    return true;
}

inline int genus_of(const RotationSystem& rs) {
    if (!rotation_connected(rs)) throw RotationError("genus: disconnected graph");
    long long V = rs.m + rs.n;
    long long E = 0;
    for (auto& r : rs.rot_a) E += static_cast<long long>(r.size());
    long long F = faces_of_rotation(rs).count;
    long long chi = V - E + F;
    if ((2 - chi) % 2 != 0 || chi > 2) throw RotationError("genus: bad Euler characteristic");
    return static_cast<int>((2 - chi) / 2);
}

inline RotationSystem reflect(const RotationSystem& rs) {
    RotationSystem out = rs;
    for (auto& r : out.rot_a) std::reverse(r.begin(), r.end());
    for (auto& r : out.rot_b) std::reverse(r.begin(), r.end());
    return out;
}

// Label schemes for classification:
//   fixed  - no relabeling at all;
//   parts  - any permutation within each part;
//   base   - the symmetry group of the shared base cycle a1-b2-a2-b1
//            (K_{2,4} only): swapping a1/a2 forces b1/b2 to swap as well,
//            b3/b4 swap freely; orientation-reversing base symmetries act
//            only through reflection.
enum class LabelScheme { fixed, parts, base };

struct Convention {
    bool reflective = false;  // classify up to reflection too
    LabelScheme labels = LabelScheme::base;
};

struct ClassId {
    std::string code;
    bool chiral = false;

    bool operator==(const ClassId& o) const { return code == o.code; }
    bool operator<(const ClassId& o) const { return code < o.code; }
};

namespace rot_detail {

inline std::string encode(const RotationSystem& rs) {
    std::ostringstream out;
    out << rs.m << "," << rs.n << ";";
    auto emit = [&](const std::vector<int>& cyc) {
        if (cyc.empty()) {
            out << "()";
            return;
        }
        int best = 0;
        for (std::size_t i = 1; i < cyc.size(); ++i)
            if (cyc[i] < cyc[best]) best = static_cast<int>(i);
        out << "(";
        for (std::size_t i = 0; i < cyc.size(); ++i)
            out << (i ? " " : "") << cyc[(best + i) % cyc.size()];
        out << ")";
    };
    for (auto& r : rs.rot_a) emit(r);
    out << "|";
    for (auto& r : rs.rot_b) emit(r);
    return out.str();
}

inline RotationSystem relabel(const RotationSystem& rs, const std::vector<int>& pa,
                              const std::vector<int>& pb) {
    // pa[i] = new index of a_i; pb[j] likewise.
    RotationSystem out;
    out.m = rs.m;
    out.n = rs.n;
    out.rot_a.resize(rs.m);
    out.rot_b.resize(rs.n);
    for (int i = 0; i < rs.m; ++i) {
        out.rot_a[pa[i]].reserve(rs.rot_a[i].size());
        for (int b : rs.rot_a[i]) out.rot_a[pa[i]].push_back(pb[b]);
    }
    for (int j = 0; j < rs.n; ++j) {
        out.rot_b[pb[j]].reserve(rs.rot_b[j].size());
        for (int a : rs.rot_b[j]) out.rot_b[pb[j]].push_back(pa[a]);
    }
    return out;
}

struct LabelAction {
    std::vector<int> pa, pb;
};

// Orientation-preserving (plus=true) or orientation-reversing base-cycle
// symmetries, as label actions on K_{2,4}.
inline std::vector<LabelAction> base_actions(bool plus) {
    const std::vector<int> ida{0, 1}, swa{1, 0};
    const std::vector<int> idb{0, 1, 2, 3}, b12{1, 0, 2, 3}, b34{0, 1, 3, 2},
        b1234{1, 0, 3, 2};
    if (plus) return {{ida, idb}, {ida, b34}, {swa, b12}, {swa, b1234}};
    return {{ida, b12}, {ida, b1234}, {swa, idb}, {swa, b34}};
}

inline std::vector<LabelAction> all_part_actions(int m, int n) {
    std::vector<LabelAction> out;
    std::vector<int> pa(m), pb(n);
    std::iota(pa.begin(), pa.end(), 0);
    do {
        std::iota(pb.begin(), pb.end(), 0);
        do {
            out.push_back({pa, pb});
        } while (std::next_permutation(pb.begin(), pb.end()));
    } while (std::next_permutation(pa.begin(), pa.end()));
    return out;
}

inline std::string min_code(const RotationSystem& rs, const std::vector<LabelAction>& group) {
    std::string best;
    for (auto& g : group) {
        std::string c = encode(relabel(rs, g.pa, g.pb));
        if (best.empty() || c < best) best = c;
    }
    return best;
}

}  // namespace rot_detail

namespace rot_detail {

struct CodePair {
    std::string straight;  // class of the drawing itself
    std::string mirrored;  // class of its mirror image
};

inline CodePair code_pair(const RotationSystem& rs, LabelScheme labels) {
    std::vector<LabelAction> straight_group, mirror_group;
    switch (labels) {
        case LabelScheme::fixed: {
            LabelAction id;
            id.pa.resize(rs.m);
            id.pb.resize(rs.n);
            std::iota(id.pa.begin(), id.pa.end(), 0);
            std::iota(id.pb.begin(), id.pb.end(), 0);
            straight_group = {id};
            mirror_group = {id};
            break;
        }
        case LabelScheme::parts:
            straight_group = all_part_actions(rs.m, rs.n);
            mirror_group = straight_group;
            break;
        case LabelScheme::base:
            if (rs.m != 2 || rs.n != 4)
                throw RotationError("base label scheme needs a K_{2,4} system");
            straight_group = base_actions(true);
            mirror_group = base_actions(false);
            break;
    }
    return {min_code(rs, straight_group), min_code(reflect(rs), mirror_group)};
}

}  // namespace rot_detail

// Minimal encoding over the admissible label actions (and the reflected copy
// when reflective); equal codes characterize isomorphism under the convention.
inline ClassId canonical_code(const RotationSystem& rs, const Convention& conv) {
    rot_detail::CodePair p = rot_detail::code_pair(rs, conv.labels);
    ClassId id;
    id.chiral = p.straight != p.mirrored;
    id.code = (conv.reflective && p.mirrored < p.straight) ? p.mirrored : p.straight;
    return id;
}

// Oriented class of the drawing's mirror image.
inline ClassId mirror_code(const RotationSystem& rs, const Convention& conv) {
    rot_detail::CodePair p = rot_detail::code_pair(rs, conv.labels);
    ClassId id;
    id.chiral = p.straight != p.mirrored;
    id.code = p.mirrored;
    return id;
}

inline std::string code_hash(const std::string& code) {
    // FNV-1a 64-bit
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : code) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

}  // namespace surfdraw
