#pragma once

#include "surfdraw/crossing.hpp"
#include "surfdraw/drawing.hpp"
#include "surfdraw/validate.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace surfdraw {

struct ArrangementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArrNode {
    Pt point;  // canonical
    bool is_crossing = false;
    int vertex = -1;  // index into drawing.vertices when a graph vertex

    std::string name(const Drawing& d, int crossing_ordinal) const {
        if (!is_crossing) return d.vertices[vertex].first.name();
        return "x" + std::to_string(crossing_ordinal);
    }
};

// A node-to-node piece of an edge curve. Chains are chart polylines joined by
// side transits; transits do not end a segment.
struct ArrSegment {
    int edge = 0;
    int from_node = 0, to_node = 0;
    std::vector<std::vector<Pt>> chains;
};

struct SegmentEnd {
    int seg = 0;
    bool at_to = false;  // false: from-end, true: to-end
};

struct Arrangement {
    std::vector<ArrNode> nodes;
    std::vector<ArrSegment> segments;
    // Per node, incident segment-ends in counter-clockwise angular order of
    // their transported directions.
    std::vector<std::vector<SegmentEnd>> rotations;
};

namespace arr_detail {

inline Rat param_on_segment(const Pt& p, const Segment& s) {
    Vec d = s.q - s.p;
    if (d.x != 0) return (p.x - s.p.x) / d.x;
    return (p.y - s.p.y) / d.y;
}

}  // namespace arr_detail

// Nodes (graph vertices plus crossings), edge curves split at crossings, and
// exact rotations per node.
inline Arrangement planarize(const Drawing& d, const ValidationReport& rep) {
    if (!rep.ok()) throw ArrangementError("planarize: invalid drawing");
    const SurfaceSpec& s = d.surface;
    Arrangement arr;

    std::map<Pt, int> node_of;
    for (std::size_t vi = 0; vi < d.vertices.size(); ++vi) {
        ArrNode n;
        n.point = d.vertices[vi].second;
        n.vertex = static_cast<int>(vi);
        node_of[n.point] = static_cast<int>(arr.nodes.size());
        arr.nodes.push_back(n);
    }
    std::set<Pt> xpts;
    for (auto& c : rep.crossings) xpts.insert(c.point);
    for (auto& p : xpts) {
        ArrNode n;
        n.point = p;
        n.is_crossing = true;
        node_of[p] = static_cast<int>(arr.nodes.size());
        arr.nodes.push_back(n);
    }

    // Split events per edge: (flat segment index, chart point).
    std::vector<FlatCurve> flats;
    for (auto& e : d.edges) flats.push_back(flatten_curve(e));
    std::vector<std::vector<std::pair<int, Pt>>> events(d.edges.size());
    for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
        for (std::size_t fi = ei + 1; fi < d.edges.size(); ++fi) {
            for (const RawHit& h : surface_hits(flats[ei], flats[fi], s, false)) {
                if (h.overlap) continue;
                CurvePos pa = classify_on_curve(flats[ei].segs[h.ka], h.pa);
                CurvePos pb = classify_on_curve(flats[fi].segs[h.kb], h.pb);
                if (pa != CurvePos::seg_interior || pb != CurvePos::seg_interior) continue;
                events[ei].push_back({h.ka, h.pa});
                events[fi].push_back({h.kb, h.pb});
            }
        }
    }

    for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
        const EdgeCurve& e = d.edges[ei];
        auto& evs = events[ei];
        std::sort(evs.begin(), evs.end(), [&](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return arr_detail::param_on_segment(a.second, flats[ei].segs[a.first].seg) <
                   arr_detail::param_on_segment(b.second, flats[ei].segs[b.first].seg);
        });
        int start_node = node_of.at(*d.vertex_point(e.u));
        int end_node = node_of.at(*d.vertex_point(e.v));

        std::vector<std::vector<Pt>> chains;
        std::vector<Pt> cur;
        int prev_node = start_node;
        std::size_t evi = 0;
        int flat_k = 0;
        for (std::size_t t = 0; t < e.arcs.size(); ++t) {
            const auto& arc = e.arcs[t];
            cur.push_back(arc[0]);
            for (std::size_t i = 0; i + 1 < arc.size(); ++i, ++flat_k) {
                while (evi < evs.size() && evs[evi].first == flat_k) {
                    Pt xp = evs[evi].second;
                    cur.push_back(xp);
                    chains.push_back(cur);
                    int xnode = node_of.at(identify(xp, s));
                    arr.segments.push_back(
                        ArrSegment{static_cast<int>(ei), prev_node, xnode, chains});
                    chains.clear();
                    cur.assign({xp});
                    prev_node = xnode;
                    ++evi;
                }
                cur.push_back(arc[i + 1]);
            }
            chains.push_back(cur);
            cur.clear();
        }
        arr.segments.push_back(ArrSegment{static_cast<int>(ei), prev_node, end_node, chains});
    }

    // Rotations: angular sort of transported end directions at every node.
    arr.rotations.assign(arr.nodes.size(), {});
    struct EndDir {
        SegmentEnd end;
        Vec dir;
    };
    std::vector<std::vector<EndDir>> at(arr.nodes.size());
    for (std::size_t si = 0; si < arr.segments.size(); ++si) {
        const ArrSegment& seg = arr.segments[si];
        auto add_end = [&](int node, bool at_to, const Pt& rep, const Pt& next) {
            Vec dir = transport_to_canonical(next - rep, rep, s);
            at[node].push_back(EndDir{SegmentEnd{static_cast<int>(si), at_to}, dir});
        };
        const auto& first = seg.chains.front();
        const auto& last = seg.chains.back();
        add_end(seg.from_node, false, first[0], first[1]);
        add_end(seg.to_node, true, last[last.size() - 1], last[last.size() - 2]);
    }
    for (std::size_t ni = 0; ni < arr.nodes.size(); ++ni) {
        std::sort(at[ni].begin(), at[ni].end(),
                  [](const EndDir& a, const EndDir& b) { return angle_less(a.dir, b.dir); });
        for (auto& ed : at[ni]) arr.rotations[ni].push_back(ed.end);
    }
    return arr;
}

// ---------------------------------------------------------------------------
// Surface faces via the frame overlay: subdivide the rectangle by the drawing
// plus the frame, take planar cells, then merge cells across identified frame
// pieces that carry no edge and drop those pieces.
// ---------------------------------------------------------------------------

struct FaceInfo {
    int id = 0;
    bool disk = false;
    Rat chi;
    std::vector<std::vector<std::string>> walks;  // node name sequences
    std::vector<int> walk_lengths;                // in segment traversals
    std::set<int> vertices;                       // indices into drawing.vertices
    std::set<int> edges;                          // original edge indices
    std::set<int> segments;                       // arrangement segment ids
};

struct FaceSet {
    std::vector<FaceInfo> faces;
    int total_walk_length = 0;

    bool all_disks() const {
        for (auto& f : faces)
            if (!f.disk) return false;
        return true;
    }
};

namespace face_detail {

struct Piece {
    std::vector<Pt> pts;
    int seg = -1;         // arrangement segment (real pieces and aliases)
    bool alias = false;   // glued copy of a real piece on the opposite side
    int frame_side = -1;  // 0 bottom, 1 top, 2 left, 3 right (frame pieces only)
    bool bridge = false;
    bool deleted() const { return bridge || (frame_side >= 0 && seg < 0); }
};

struct Complex {
    const Drawing* d = nullptr;
    const Arrangement* arr = nullptr;
    SurfaceSpec s;
    std::vector<Piece> pieces;

    // Pair partner piece for every frame piece (identified interval) and for
    // bridges (self). -1 for interior real pieces.
    std::vector<int> partner;

    Pt glue(const Pt& p, int side) const {  // image on the partner side
        switch (side) {
            case 0: return Pt{p.x, s.H};
            case 1: return Pt{p.x, Rat(0)};
            case 2: return Pt{s.W, s.kind == SurfaceKind::klein ? s.H - p.y : p.y};
            default: return Pt{Rat(0), s.kind == SurfaceKind::klein ? s.H - p.y : p.y};
        }
    }
};

inline bool chain_on_side(const std::vector<Pt>& pts, int side, const SurfaceSpec& s) {
    for (auto& p : pts) {
        switch (side) {
            case 0:
                if (p.y != 0) return false;
                break;
            case 1:
                if (p.y != s.H) return false;
                break;
            case 2:
                if (p.x != 0) return false;
                break;
            case 3:
                if (p.x != s.W) return false;
                break;
        }
    }
    return true;
}

inline Complex build_complex(const Drawing& d, const Arrangement& arr) {
    Complex cx;
    cx.d = &d;
    cx.arr = &arr;
    cx.s = d.surface;
    const SurfaceSpec& s = cx.s;

    // Real pieces: one per chain; note chains lying along a frame side.
    struct SidedChain {
        int piece;
        int side;
        Rat lo, hi;  // interval coordinate on that side
    };
    std::vector<SidedChain> on_frame;
    for (std::size_t si = 0; si < arr.segments.size(); ++si) {
        for (auto& chain : arr.segments[si].chains) {
            Piece p;
            p.pts = chain;
            p.seg = static_cast<int>(si);
            int side = -1;
            for (int cand = 0; cand < 4; ++cand)
                if (chain_on_side(chain, cand, s)) side = cand;
            p.frame_side = side;
            cx.pieces.push_back(p);
            if (side >= 0) {
                Rat a = side < 2 ? chain.front().x : chain.front().y;
                Rat b = side < 2 ? chain.back().x : chain.back().y;
                if (a > b) std::swap(a, b);
                on_frame.push_back(
                    SidedChain{static_cast<int>(cx.pieces.size()) - 1, side, a, b});
            }
        }
    }

    // Frame subdivision events, unified across each glued side pair.
    std::set<Rat> xev{Rat(0), s.W};
    std::set<Rat> yev{Rat(0), s.H};
    auto note_boundary_point = [&](const Pt& p) {
        if (p.y == 0 || p.y == s.H) xev.insert(p.x);
        if (p.x == 0) yev.insert(p.y);
        if (p.x == s.W) yev.insert(s.kind == SurfaceKind::klein ? s.H - p.y : p.y);
    };
    for (auto& pc : cx.pieces) {
        note_boundary_point(pc.pts.front());
        note_boundary_point(pc.pts.back());
    }
    for (auto& [vid, vp] : d.vertices)
        for (auto& r : representatives(vp, s)) note_boundary_point(r);

    // Build frame pieces per interval: real chains cover their interval; a
    // covered interval on one side induces an alias piece on the partner side.
    auto covered_by = [&](int side, const Rat& lo, const Rat& hi) -> int {
        for (auto& sc : on_frame)
            if (sc.side == side && sc.lo <= lo && hi <= sc.hi) return sc.piece;
        return -1;
    };
    auto add_interval_pieces = [&](int side_a, int side_b, const std::vector<Rat>& evs) {
        auto mk_pt = [&](int side, const Rat& t) {
            switch (side) {
                case 0: return Pt{t, Rat(0)};
                case 1: return Pt{t, s.H};
                case 2: return Pt{Rat(0), t};
                default: return Pt{s.W, s.kind == SurfaceKind::klein ? s.H - t : t};
            }
        };
        for (std::size_t i = 0; i + 1 < evs.size(); ++i) {
            const Rat& lo = evs[i];
            const Rat& hi = evs[i + 1];
            int real_a = covered_by(side_a, lo, hi);
            // Partner-side interval in its own coordinate.
            Rat plo = lo, phi = hi;
            int real_b;
            if (side_b == 3) {
                // right side stores y; left coordinate t maps to y = H - t (klein)
                Pt q0 = mk_pt(3, lo), q1 = mk_pt(3, hi);
                Rat y0 = q0.y, y1 = q1.y;
                if (y0 > y1) std::swap(y0, y1);
                real_b = covered_by(3, y0, y1);
            } else {
                real_b = covered_by(side_b, plo, phi);
            }
            if (real_a >= 0 && real_b >= 0)
                throw ArrangementError("overlapping boundary chains");
            auto make_piece = [&](int side, int alias_of) {
                Piece p;
                if (alias_of >= 0) {
                    // Glued copy of the real chain, same sequence order.
                    const Piece& rp = cx.pieces[alias_of];
                    for (auto& q : rp.pts) p.pts.push_back(cx.glue(q, rp.frame_side));
                    p.seg = rp.seg;
                    p.alias = true;
                } else {
                    p.pts = {mk_pt(side, lo), mk_pt(side, hi)};
                }
                p.frame_side = side;
                cx.pieces.push_back(p);
                return static_cast<int>(cx.pieces.size()) - 1;
            };
            int pa = real_a >= 0 ? real_a : make_piece(side_a, real_b);
            int pb = real_b >= 0 ? real_b : make_piece(side_b, real_a);
            cx.partner.resize(cx.pieces.size(), -1);
            cx.partner[pa] = pb;
            cx.partner[pb] = pa;
        }
    };
    std::vector<Rat> xs(xev.begin(), xev.end()), ys(yev.begin(), yev.end());
    cx.partner.assign(cx.pieces.size(), -1);
    add_interval_pieces(0, 1, xs);
    add_interval_pieces(2, 3, ys);
    return cx;
}

// Vertical upward ray from p; first hit against pieces, skipping piece ids in
// `skip_component`. Returns (piece, point) or piece -1 if none.
struct RayHit {
    int piece = -1;
    Pt point{};
};

inline RayHit ray_up(const Complex& cx, const Pt& p, const std::vector<int>& comp,
                     int my_comp) {
    RayHit best;
    bool have = false;
    Rat besty;
    for (std::size_t pi = 0; pi < cx.pieces.size(); ++pi) {
        if (comp[pi] == my_comp) continue;
        const auto& pts = cx.pieces[pi].pts;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const Pt& a = pts[i];
            const Pt& b = pts[i + 1];
            Rat candy;
            bool hit = false;
            if (a.x == b.x) {
                if (a.x == p.x) {
                    Rat lo = a.y < b.y ? a.y : b.y;
                    Rat hi = a.y < b.y ? b.y : a.y;
                    if (hi > p.y) {
                        candy = lo > p.y ? lo : hi;  // lowest point above p
                        if (lo > p.y) candy = lo;
                        hit = true;
                    }
                }
            } else {
                Rat lo = a.x < b.x ? a.x : b.x;
                Rat hi = a.x < b.x ? b.x : a.x;
                if (p.x >= lo && p.x <= hi) {
                    candy = a.y + (b.y - a.y) * (p.x - a.x) / (b.x - a.x);
                    if (candy > p.y) hit = true;
                }
            }
            if (hit && (!have || candy < besty)) {
                have = true;
                besty = candy;
                best.piece = static_cast<int>(pi);
                best.point = Pt{p.x, candy};
            }
        }
    }
    return best;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace face_detail

inline FaceSet face_set(const Drawing& d, const Arrangement& arr) {
    using namespace face_detail;
    const SurfaceSpec& s = d.surface;
    Complex cx = build_complex(d, arr);

    // --- connectivity, with isolated vertices as extra island points ---
    std::map<Pt, int> chart_node;
    auto node_id = [&](const Pt& p) {
        auto it = chart_node.find(p);
        if (it != chart_node.end()) return it->second;
        int id = static_cast<int>(chart_node.size());
        chart_node[p] = id;
        return id;
    };
    for (auto& pc : cx.pieces) {
        node_id(pc.pts.front());
        node_id(pc.pts.back());
    }
    std::vector<Pt> isolated;  // vertices with no incident segment
    {
        std::set<int> used;
        for (auto& seg : arr.segments) {
            used.insert(seg.from_node);
            used.insert(seg.to_node);
        }
        for (std::size_t ni = 0; ni < arr.nodes.size(); ++ni)
            if (!used.count(static_cast<int>(ni))) isolated.push_back(arr.nodes[ni].point);
        for (auto& p : isolated) node_id(p);
    }

    // Components over chart nodes; bridge islands to the rest with vertical
    // auxiliary pieces so every cell is a disk with one boundary walk.
    auto compute_components = [&]() {
        UnionFind uf(static_cast<int>(chart_node.size()));
        for (auto& pc : cx.pieces)
            uf.unite(chart_node.at(pc.pts.front()), chart_node.at(pc.pts.back()));
        return uf;
    };
    for (int guard = 0; guard < 1000; ++guard) {
        UnionFind uf = compute_components();
        int frame_comp = uf.find(chart_node.at(Pt{Rat(0), Rat(0)}));
        // Component id per piece (by its first endpoint) and per isolated pt.
        std::vector<int> piece_comp(cx.pieces.size());
        for (std::size_t pi = 0; pi < cx.pieces.size(); ++pi)
            piece_comp[pi] = uf.find(chart_node.at(cx.pieces[pi].pts.front()));
        // Island: topmost point of some non-frame component.
        bool found = false;
        Pt top;
        int island = -1;
        auto consider = [&](const Pt& p, int comp) {
            if (comp == frame_comp) return;
            if (!found || p.y > top.y || (p.y == top.y && p.x < top.x)) {
                found = true;
                top = p;
                island = comp;
            }
        };
        for (std::size_t pi = 0; pi < cx.pieces.size(); ++pi)
            for (auto& p : cx.pieces[pi].pts) consider(p, piece_comp[pi]);
        for (auto& p : isolated) consider(p, uf.find(chart_node.at(p)));
        if (!found) break;

        // If the top point is a bend, make it a node by splitting its piece.
        for (std::size_t pi = 0; pi < cx.pieces.size(); ++pi) {
            auto& pts = cx.pieces[pi].pts;
            for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
                if (pts[i] == top) {
                    Piece tail = cx.pieces[pi];
                    tail.pts.assign(pts.begin() + i, pts.end());
                    pts.resize(i + 1);
                    cx.pieces.push_back(tail);
                    cx.partner.push_back(-1);
                    node_id(top);
                }
            }
        }

        RayHit hit = ray_up(cx, top, piece_comp, island);
        if (hit.piece < 0) throw ArrangementError("bridge ray found no target");
        // Split the hit piece at the hit point unless it is an endpoint.
        if (hit.point != cx.pieces[hit.piece].pts.front() &&
            hit.point != cx.pieces[hit.piece].pts.back()) {
            auto split_at = [&](int pi, const Pt& q) {
                auto& pts = cx.pieces[pi].pts;
                std::vector<Pt> head, tail;
                bool after = false;
                for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                    if (!after) head.push_back(pts[i]);
                    else tail.push_back(pts[i]);
                    Segment sseg{pts[i], pts[i + 1]};
                    if (!after && point_on_segment(q, sseg) != OnSegment::off &&
                        q != pts[i + 1] && q != pts[i]) {
                        head.push_back(q);
                        tail.push_back(q);
                        after = true;
                    } else if (!after && q == pts[i + 1] && i + 2 < pts.size()) {
                        head.push_back(q);
                        tail.push_back(q);
                        after = true;
                    }
                }
                if (!after) return -1;
                tail.push_back(pts.back());
                Piece second = cx.pieces[pi];
                cx.pieces[pi].pts = head;
                second.pts = tail;
                cx.pieces.push_back(second);
                cx.partner.push_back(-1);
                node_id(q);
                return static_cast<int>(cx.pieces.size()) - 1;
            };
            int second = split_at(hit.piece, hit.point);
            if (second < 0) throw ArrangementError("bridge split failed");
            // Keep glued frame pairs subdivided in sync.
            int par = cx.partner[hit.piece];
            if (par >= 0 && par != hit.piece) {
                Pt q2 = cx.glue(hit.point, cx.pieces[hit.piece].frame_side);
                int second2 = split_at(par, q2);
                if (second2 < 0) throw ArrangementError("partner split failed");
                // Re-pair the four halves by glued endpoints.
                auto ends_match = [&](int a, int b) {
                    const Pt& a0 = cx.pieces[a].pts.front();
                    const Pt& a1 = cx.pieces[a].pts.back();
                    Pt g0 = cx.glue(a0, cx.pieces[a].frame_side);
                    Pt g1 = cx.glue(a1, cx.pieces[a].frame_side);
                    const Pt& b0 = cx.pieces[b].pts.front();
                    const Pt& b1 = cx.pieces[b].pts.back();
                    return (g0 == b0 && g1 == b1) || (g0 == b1 && g1 == b0);
                };
                for (int a : {hit.piece, second}) {
                    for (int b : {par, second2}) {
                        if (ends_match(a, b)) {
                            cx.partner[a] = b;
                            cx.partner[b] = a;
                        }
                    }
                }
            }
        }
        Piece bridge;
        bridge.pts = {top, hit.point};
        bridge.bridge = true;
        cx.pieces.push_back(bridge);
        cx.partner.push_back(static_cast<int>(cx.pieces.size()) - 1);  // self
    }

    // --- darts, rotations, cell walks ---
    int P = static_cast<int>(cx.pieces.size());
    auto dart_pts = [&](int dart) {
        std::vector<Pt> pts = cx.pieces[dart / 2].pts;
        if (dart % 2) std::reverse(pts.begin(), pts.end());
        return pts;
    };
    auto dart_tail = [&](int dart) {
        const auto& pts = cx.pieces[dart / 2].pts;
        return dart % 2 ? pts.back() : pts.front();
    };
    std::map<Pt, std::vector<std::pair<Vec, int>>> rot;  // node point -> (dir, dart)
    for (int pi = 0; pi < P; ++pi) {
        const auto& pts = cx.pieces[pi].pts;
        rot[pts.front()].push_back({pts[1] - pts[0], 2 * pi});
        rot[pts.back()].push_back({pts[pts.size() - 2] - pts.back(), 2 * pi + 1});
    }
    std::map<int, int> next_dart;  // face successor (face on the left)
    for (auto& [p, list] : rot) {
        std::sort(list.begin(), list.end(),
                  [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
        int n = static_cast<int>(list.size());
        // Face on the left: after arriving along rev(d), leave along the
        // ccw-predecessor of d.
        for (int i = 0; i < n; ++i) {
            int arriving = list[i].second ^ 1;  // dart ending here with this out-dir
            int prev = list[(i + n - 1) % n].second;
            next_dart[arriving] = prev;
        }
    }

    std::vector<int> walk_of(2 * P, -1), pos_in_walk(2 * P, -1);
    std::vector<std::vector<int>> walks;
    for (int dstart = 0; dstart < 2 * P; ++dstart) {
        if (walk_of[dstart] >= 0) continue;
        std::vector<int> w;
        int dd = dstart;
        do {
            walk_of[dd] = static_cast<int>(walks.size());
            pos_in_walk[dd] = static_cast<int>(w.size());
            w.push_back(dd);
            dd = next_dart.at(dd);
        } while (dd != dstart);
        walks.push_back(std::move(w));
    }
    // Signed area per walk; the unique negative one is the unbounded face.
    int unbounded = -1;
    for (std::size_t wi = 0; wi < walks.size(); ++wi) {
        Rat area2(0);
        for (int dd : walks[wi]) {
            auto pts = dart_pts(dd);
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                area2 += pts[i].x * pts[i + 1].y - pts[i + 1].x * pts[i].y;
        }
        if (area2 < 0) {
            if (unbounded >= 0) throw ArrangementError("multiple unbounded walks");
            unbounded = static_cast<int>(wi);
        }
    }
    if (unbounded < 0) throw ArrangementError("no unbounded walk");

    // Cell-side slots and teleport links across deleted pieces.
    auto cell_dart = [&](int piece) {  // the dart of `piece` not on the unbounded walk
        int d0 = 2 * piece, d1 = 2 * piece + 1;
        if (walk_of[d0] == unbounded) return d1;
        return d0;
    };
    struct Link {
        int partner_dart = -1;
        bool flip = false;
    };
    std::vector<Link> link(2 * P);
    UnionFind cells(static_cast<int>(walks.size()));
    for (int pi = 0; pi < P; ++pi) {
        if (!cx.pieces[pi].deleted()) continue;
        if (cx.pieces[pi].bridge) {
            link[2 * pi] = Link{2 * pi + 1, false};
            link[2 * pi + 1] = Link{2 * pi, false};
            cells.unite(walk_of[2 * pi], walk_of[2 * pi + 1]);
            continue;
        }
        int par = cx.partner[pi];
        if (par < 0 || par == pi) throw ArrangementError("frame piece without partner");
        if (par < pi) continue;  // each pair once
        int qa = cell_dart(pi), qb = cell_dart(par);
        // Orientation across the gluing: does the gluing map qa's traversal
        // onto qb's own direction (flip) or onto its reverse (no flip)?
        Pt ga = cx.glue(dart_tail(qa), cx.pieces[pi].frame_side);
        bool flip = ga == dart_tail(qb);
        link[qa] = Link{qb, flip};
        link[qb] = Link{qa, flip};
        cells.unite(walk_of[qa], walk_of[qb]);
    }

    // --- merged boundary walks over (dart, direction) states ---
    auto is_walkable = [&](int dd) {
        const Piece& pc = cx.pieces[dd / 2];
        return !pc.deleted() && pc.seg >= 0 && walk_of[dd] != unbounded;
    };
    auto advance = [&](int dd, bool fwdmode) {
        const auto& w = walks[walk_of[dd]];
        int n = static_cast<int>(w.size());
        int p = pos_in_walk[dd];
        return w[(p + (fwdmode ? 1 : n - 1)) % n];
    };
    auto step = [&](std::pair<int, bool> st) {
        int dd = advance(st.first, st.second);
        bool m = st.second;
        while (cx.pieces[dd / 2].deleted()) {
            const Link& lk = link[dd];
            if (lk.partner_dart < 0) throw ArrangementError("broken teleport link");
            m = m ^ lk.flip;
            dd = advance(lk.partner_dart, m);
        }
        return std::make_pair(dd, m);
    };

    std::set<std::pair<int, bool>> visited;
    struct MergedWalk {
        std::vector<std::pair<int, bool>> states;
        int cell = 0;  // representative planar walk id, for face grouping
    };
    std::vector<MergedWalk> merged;
    for (int dd = 0; dd < 2 * P; ++dd) {
        for (bool m : {false, true}) {
            if (!is_walkable(dd) || visited.count({dd, m})) continue;
            MergedWalk mw;
            std::pair<int, bool> st{dd, m};
            do {
                visited.insert(st);
                mw.states.push_back(st);
                st = step(st);
            } while (st != std::make_pair(dd, m));
            mw.cell = cells.find(walk_of[dd]);
            merged.push_back(std::move(mw));
        }
    }
    // Each boundary circle was traced in both directions: orientable circles
    // as two mirror orbits, orientation-reversing ones as one doubled orbit.
    std::vector<MergedWalk> boundary;
    std::set<std::pair<int, bool>> consumed;
    for (auto& mw : merged) {
        auto first = mw.states.front();
        if (consumed.count(first)) continue;
        bool self_doubled = false;
        for (auto& st : mw.states)
            if (st.first == first.first && st.second != first.second) self_doubled = true;
        MergedWalk out;
        out.cell = mw.cell;
        if (self_doubled) {
            out.states.assign(mw.states.begin(), mw.states.begin() + mw.states.size() / 2);
        } else {
            out.states = mw.states;
        }
        for (auto& st : mw.states) {
            consumed.insert(st);
            consumed.insert({st.first, !st.second});
        }
        boundary.push_back(std::move(out));
    }

    // --- assemble faces ---
    std::map<int, int> face_of_cell;  // cell class -> face index (pre-sort)
    std::vector<FaceInfo> faces;
    auto face_for = [&](int cellclass) {
        auto it = face_of_cell.find(cellclass);
        if (it != face_of_cell.end()) return it->second;
        int id = static_cast<int>(faces.size());
        face_of_cell[cellclass] = id;
        faces.push_back(FaceInfo{});
        return id;
    };
    // Every bounded cell yields a face entry even if its boundary has no real
    // pieces (the empty-drawing face).
    for (std::size_t wi = 0; wi < walks.size(); ++wi)
        if (static_cast<int>(wi) != unbounded) face_for(cells.find(static_cast<int>(wi)));

    // Crossing ordinals for names.
    std::map<int, int> crossing_ordinal;
    {
        int k = 0;
        for (std::size_t ni = 0; ni < arr.nodes.size(); ++ni)
            if (arr.nodes[ni].is_crossing) crossing_ordinal[static_cast<int>(ni)] = k++;
    }
    std::map<Pt, int> arr_node_of;
    for (std::size_t ni = 0; ni < arr.nodes.size(); ++ni)
        arr_node_of[arr.nodes[ni].point] = static_cast<int>(ni);

    int total_len = 0;
    for (auto& mw : boundary) {
        int fid = face_for(mw.cell);
        FaceInfo& f = faces[fid];
        // Coalesce piece traversals into segment traversals.
        struct Trav {
            int seg;
            bool forward;
        };
        std::vector<Trav> travs;
        for (auto& [dd, m] : mw.states) {
            const Piece& pc = cx.pieces[dd / 2];
            bool along = (dd % 2 == 0) == !m;  // piece points order == (dart fwd) xor rev mode
            if (!travs.empty() && travs.back().seg == pc.seg &&
                travs.back().forward == along) continue;
            travs.push_back(Trav{pc.seg, along});
        }
        if (travs.size() > 1 && travs.front().seg == travs.back().seg &&
            travs.front().forward == travs.back().forward)
            travs.pop_back();  // cyclic wrap
        f.walk_lengths.push_back(static_cast<int>(travs.size()));
        total_len += static_cast<int>(travs.size());
        std::vector<std::string> names;
        for (auto& t : travs) {
            const ArrSegment& seg = arr.segments[t.seg];
            int node = t.forward ? seg.from_node : seg.to_node;
            names.push_back(arr.nodes[node].name(d, arr.nodes[node].is_crossing
                                                        ? crossing_ordinal[node]
                                                        : 0));
            f.segments.insert(t.seg);
            f.edges.insert(seg.edge);
            for (int nn : {seg.from_node, seg.to_node})
                if (!arr.nodes[nn].is_crossing) f.vertices.insert(arr.nodes[nn].vertex);
        }
        f.walks.push_back(names);
    }

    // chi per face: cells - deleted surface pieces + interiorized node orbits.
    std::map<int, Rat> chi;
    for (std::size_t wi = 0; wi < walks.size(); ++wi)
        if (static_cast<int>(wi) != unbounded) chi[cells.find(static_cast<int>(wi))] += 1;
    for (int pi = 0; pi < P; ++pi) {
        if (!cx.pieces[pi].deleted()) continue;
        if (!cx.pieces[pi].bridge && cx.partner[pi] < pi) continue;  // pairs once
        chi[cells.find(walk_of[cell_dart(pi)])] -= 1;
    }
    // Interiorized orbits: chart nodes whose every incident piece is deleted,
    // grouped by canonical point; isolated vertices included via bridges.
    // A pure frame node fills in (+1 to chi); a drawing vertex inside the
    // face punctures it instead (-1) and sits on the face's closure boundary.
    {
        std::map<Pt, std::vector<int>> pieces_at;  // chart point -> pieces
        for (int pi = 0; pi < P; ++pi) {
            pieces_at[cx.pieces[pi].pts.front()].push_back(pi);
            pieces_at[cx.pieces[pi].pts.back()].push_back(pi);
        }
        std::map<Pt, std::vector<Pt>> orbit_reps;  // canonical -> chart reps present
        for (auto& [p, list] : pieces_at) orbit_reps[identify(p, s)].push_back(p);
        for (auto& [canon, reps] : orbit_reps) {
            bool all_deleted = true;
            int some_piece = -1;
            for (auto& r : reps)
                for (int pi : pieces_at[r]) {
                    some_piece = pi;
                    all_deleted &= cx.pieces[pi].deleted();
                }
            if (!all_deleted || some_piece < 0) continue;
            int cellclass = cells.find(walk_of[cell_dart(some_piece)]);
            auto it = arr_node_of.find(canon);
            if (it == arr_node_of.end()) {
                chi[cellclass] += 1;
                continue;
            }
            chi[cellclass] -= 1;
            int fid = face_for(cellclass);
            if (!arr.nodes[it->second].is_crossing)
                faces[fid].vertices.insert(arr.nodes[it->second].vertex);
        }
    }
    for (auto& [cellclass, fid] : face_of_cell) {
        faces[fid].chi = chi[cellclass];
        faces[fid].disk = chi[cellclass] == 1;
        if (faces[fid].disk && faces[fid].walks.size() > 1)
            throw ArrangementError("disk face with several walks");
    }

    // Deterministic order: by minimum incident segment id, then walks.
    std::sort(faces.begin(), faces.end(), [](const FaceInfo& a, const FaceInfo& b) {
        int ma = a.segments.empty() ? INT32_MAX : *a.segments.begin();
        int mb = b.segments.empty() ? INT32_MAX : *b.segments.begin();
        if (ma != mb) return ma < mb;
        return a.walks < b.walks;
    });
    FaceSet fs;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        faces[i].id = static_cast<int>(i);
        fs.faces.push_back(faces[i]);
    }
    fs.total_walk_length = total_len;
    return fs;
}

inline FaceSet face_set(const Drawing& d) {
    ValidationReport rep = validate(d);
    Arrangement arr = planarize(d, rep);
    return face_set(d, arr);
}

struct EulerReport {
    long long V = 0, E = 0, F = 0, chi = 0;
    bool cellular = false;
};

inline EulerReport euler_report(const Drawing& d) {
    ValidationReport rep = validate(d);
    Arrangement arr = planarize(d, rep);
    FaceSet fs = face_set(d, arr);
    EulerReport er;
    er.V = static_cast<long long>(arr.nodes.size());
    er.E = static_cast<long long>(arr.segments.size());
    er.F = static_cast<long long>(fs.faces.size());
    er.chi = er.V - er.E + er.F;
    er.cellular = fs.all_disks();
    return er;
}

// Faces whose closure boundary carries every part-B vertex.
inline std::vector<int> all_b_faces(const Drawing& d, const FaceSet& fs) {
    std::set<int> bset;
    for (std::size_t vi = 0; vi < d.vertices.size(); ++vi)
        if (d.vertices[vi].first.part == Part::B) bset.insert(static_cast<int>(vi));
    std::vector<int> out;
    for (auto& f : fs.faces) {
        bool all = true;
        for (int b : bset) all &= f.vertices.count(b) > 0;
        if (all) out.push_back(f.id);
    }
    return out;
}

inline std::vector<int> all_b_faces(const Drawing& d) { return all_b_faces(d, face_set(d)); }

inline std::string face_report_text(const Drawing& d, const FaceSet& fs) {
    std::ostringstream out;
    out << "faces: " << fs.faces.size() << "\n";
    for (auto& f : fs.faces) {
        out << "face " << f.id << " disk=" << (f.disk ? "yes" : "no");
        out << " b-vertices={";
        bool first = true;
        for (int vi : f.vertices) {
            if (d.vertices[vi].first.part != Part::B) continue;
            out << (first ? "" : ",") << d.vertices[vi].first.name();
            first = false;
        }
        out << "}\n";
        for (auto& w : f.walks) {
            out << "  walk:";
            for (auto& n : w) out << " " << n;
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace surfdraw
