#pragma once

#include "surfdraw/rational.hpp"

#include <optional>
#include <variant>

namespace surfdraw {

struct Segment {
    Pt p, q;
};

// Sign of (q-p) x (r-p): +1 counter-clockwise, 0 collinear, -1 clockwise.
inline int orient(const Pt& p, const Pt& q, const Pt& r) {
    return sign(cross(q - p, r - p));
}

enum class OnSegment { interior, endpoint, off };

inline OnSegment point_on_segment(const Pt& p, const Segment& s) {
    if (p == s.p || p == s.q) return OnSegment::endpoint;
    if (orient(s.p, s.q, p) != 0) return OnSegment::off;
    Vec d = s.q - s.p;
    Rat t = dot(p - s.p, d);  // projection, scaled by |d|^2
    if (t > 0 && t < dot(d, d)) return OnSegment::interior;
    return OnSegment::off;
}

struct SegHit {
    enum class Kind { none, point, degenerate } kind = Kind::none;
    Pt point{};  // set when kind == point
};

// Single-point intersections (including endpoint contacts) are `point`;
// collinear positive-length overlaps are `degenerate`.
inline SegHit seg_intersect(const Segment& a, const Segment& b) {
    int o1 = orient(a.p, a.q, b.p);
    int o2 = orient(a.p, a.q, b.q);
    int o3 = orient(b.p, b.q, a.p);
    int o4 = orient(b.p, b.q, a.q);

    if (o1 == 0 && o2 == 0) {
        // Collinear: project onto the dominant axis of a.
        Vec d = a.q - a.p;
        auto coord = [&](const Pt& p) { return (d.x != 0) ? p.x : p.y; };
        Rat a0 = coord(a.p), a1 = coord(a.q);
        if (a0 > a1) std::swap(a0, a1);
        Rat b0 = coord(b.p), b1 = coord(b.q);
        if (b0 > b1) std::swap(b0, b1);
        Rat lo = a0 > b0 ? a0 : b0;
        Rat hi = a1 < b1 ? a1 : b1;
        if (lo > hi) return {};
        if (lo < hi) return {SegHit::Kind::degenerate, {}};
        // Touching at one shared point.
        Pt m = (coord(a.p) == lo) ? a.p : a.q;
        return {SegHit::Kind::point, m};
    }

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        // Proper transversal crossing of the interiors.
        Vec r = a.q - a.p, s = b.q - b.p;
        Rat t = cross(b.p - a.p, s) / cross(r, s);
        return {SegHit::Kind::point, Pt{a.p.x + t * r.x, a.p.y + t * r.y}};
    }

    // Endpoint of one segment against the other segment.
    auto endpoint_hit = [&](const Pt& p, const Segment& other) -> std::optional<Pt> {
        if (point_on_segment(p, other) != OnSegment::off) return p;
        return std::nullopt;
    };
    if (auto m = endpoint_hit(b.p, a)) return {SegHit::Kind::point, *m};
    if (auto m = endpoint_hit(b.q, a)) return {SegHit::Kind::point, *m};
    if (auto m = endpoint_hit(a.p, b)) return {SegHit::Kind::point, *m};
    if (auto m = endpoint_hit(a.q, b)) return {SegHit::Kind::point, *m};
    return {};
}

}  // namespace surfdraw
