#pragma once

#include "surfdraw/drawing.hpp"
#include "surfdraw/geom.hpp"
#include "surfdraw/surface.hpp"

#include <optional>
#include <vector>

namespace surfdraw {

// Position of a point along an edge curve, looked at through one segment.
enum class CurvePos { seg_interior, bend, transit_joint, curve_end, off_curve };

struct CurveSeg {
    int arc = 0;
    int idx = 0;  // segment index within the arc
    Segment seg;
    bool curve_first = false;  // seg.p is the curve's first point
    bool curve_last = false;   // seg.q is the curve's last point
    bool arc_first = false;    // seg.p starts this arc
    bool arc_last = false;     // seg.q ends this arc
};

struct FlatCurve {
    std::vector<CurveSeg> segs;
};

inline FlatCurve flatten_curve(const EdgeCurve& e) {
    FlatCurve fc;
    for (std::size_t t = 0; t < e.arcs.size(); ++t) {
        const auto& arc = e.arcs[t];
        for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
            CurveSeg cs;
            cs.arc = static_cast<int>(t);
            cs.idx = static_cast<int>(i);
            cs.seg = Segment{arc[i], arc[i + 1]};
            cs.arc_first = i == 0;
            cs.arc_last = i + 2 == arc.size();
            cs.curve_first = cs.arc_first && t == 0;
            cs.curve_last = cs.arc_last && t + 1 == e.arcs.size();
            fc.segs.push_back(cs);
        }
    }
    return fc;
}

inline CurvePos classify_on_curve(const CurveSeg& cs, const Pt& p) {
    if (p == cs.seg.p) {
        if (cs.curve_first) return CurvePos::curve_end;
        if (cs.arc_first) return CurvePos::transit_joint;
        return CurvePos::bend;
    }
    if (p == cs.seg.q) {
        if (cs.curve_last) return CurvePos::curve_end;
        if (cs.arc_last) return CurvePos::transit_joint;
        return CurvePos::bend;
    }
    if (point_on_segment(p, cs.seg) == OnSegment::interior) return CurvePos::seg_interior;
    return CurvePos::off_curve;
}

struct RawHit {
    int ka = 0, kb = 0;   // flattened segment indices
    Pt pa{}, pb{};        // the contact in each curve's own chart
    bool overlap = false; // collinear positive-length contact
};

// All surface contacts between two edge curves (or one curve with itself when
// same_curve). Both curves live in the closed rectangle, so contacts can only
// arise against the 3x3 block of neighboring deck copies.
inline std::vector<RawHit> surface_hits(const FlatCurve& a, const FlatCurve& b,
                                        const SurfaceSpec& s, bool same_curve) {
    std::vector<RawHit> hits;
    for (int ka = 0; ka < static_cast<int>(a.segs.size()); ++ka) {
        const Segment& sa = a.segs[ka].seg;
        int kb0 = same_curve ? ka : 0;
        for (int kb = kb0; kb < static_cast<int>(b.segs.size()); ++kb) {
            const Segment& sb = b.segs[kb].seg;
            for (int i = -1; i <= 1; ++i) {
                for (int j = -1; j <= 1; ++j) {
                    DeckStep g{i, j};
                    if (same_curve && ka == kb && g.identity()) continue;
                    Segment moved{deck_apply(g, sb.p, s), deck_apply(g, sb.q, s)};
                    SegHit h = seg_intersect(sa, moved);
                    if (h.kind == SegHit::Kind::none) continue;
                    RawHit rh;
                    rh.ka = ka;
                    rh.kb = kb;
                    rh.overlap = h.kind == SegHit::Kind::degenerate;
                    if (!rh.overlap) {
                        rh.pa = h.point;
                        rh.pb = deck_apply(deck_inverse(g, s), h.point, s);
                    }
                    hits.push_back(rh);
                }
            }
        }
    }
    return hits;
}

}  // namespace surfdraw
