#pragma once

#include "surfdraw/drawing.hpp"
#include "surfdraw/surface_isect.hpp"

#include <stdexcept>
#include <vector>

namespace surfdraw {

struct LiftedSegment {
    int edge = 0;
    DeckStep tile{};
    Segment seg;
};

struct CoverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lift every edge curve to the universal cover, starting in the central
// fundamental domain. Consecutive arcs continue into the neighboring tile
// given by the transit side; an edge needing more than k steps in one
// direction is an error.
inline std::vector<LiftedSegment> unroll_to_cover(const Drawing& d, int k) {
    if (k < 1) throw CoverError("window must be at least 1");
    const SurfaceSpec& s = d.surface;
    std::vector<LiftedSegment> out;
    for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
        const EdgeCurve& e = d.edges[ei];
        DeckStep g{};  // cumulative transform for the current arc
        for (std::size_t t = 0; t < e.arcs.size(); ++t) {
            const auto& arc = e.arcs[t];
            for (std::size_t i = 0; i + 1 < arc.size(); ++i)
                out.push_back(LiftedSegment{static_cast<int>(ei), g,
                                            Segment{deck_apply(g, arc[i], s),
                                                    deck_apply(g, arc[i + 1], s)}});
            if (t + 1 < e.arcs.size()) {
                const Pt& end = arc.back();
                DeckStep step;
                if (end.x == s.W)
                    step = DeckStep{1, 0};
                else if (end.x == 0)
                    step = deck_inverse(DeckStep{1, 0}, s);
                else if (end.y == s.H)
                    step = DeckStep{0, 1};
                else if (end.y == 0)
                    step = DeckStep{0, -1};
                else
                    throw CoverError("arc join off the boundary");
                g = deck_compose(g, step, s);
                if (g.i > k || g.i < -k || g.j > k || g.j < -k)
                    throw CoverError("window too small for edge " + e.u.name() + e.v.name());
            }
        }
    }
    return out;
}

}  // namespace surfdraw
