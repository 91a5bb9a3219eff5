#pragma once

#include "surfdraw/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfdraw {

enum class SurfaceKind { torus, klein };

enum class Side { left, right, top, bottom };

inline const char* side_name(Side s) {
    switch (s) {
        case Side::left: return "left";
        case Side::right: return "right";
        case Side::top: return "top";
        case Side::bottom: return "bottom";
    }
    return "?";
}

// The torus or Klein bottle as a W x H rectangle with glued sides.
// Horizontal sides are glued straight for both kinds, (x,0) ~ (x,H).
// Vertical sides: torus glues (0,y) ~ (W,y); klein glues (0,y) ~ (W,H-y).
struct SurfaceSpec {
    SurfaceKind kind = SurfaceKind::torus;
    Rat W, H;

    bool valid() const { return W > 0 && H > 0; }

    bool in_rect(const Pt& p) const {
        return p.x >= 0 && p.x <= W && p.y >= 0 && p.y <= H;
    }
    bool on_boundary(const Pt& p) const {
        return p.x == 0 || p.x == W || p.y == 0 || p.y == H;
    }
    bool is_corner(const Pt& p) const {
        return (p.x == 0 || p.x == W) && (p.y == 0 || p.y == H);
    }
    bool interior(const Pt& p) const {
        return p.x > 0 && p.x < W && p.y > 0 && p.y < H;
    }

    // Determinant of the gluing derivative per side pair: orientation check.
    int vertical_gluing_det() const { return kind == SurfaceKind::klein ? -1 : 1; }
    int horizontal_gluing_det() const { return 1; }
};

// Canonical representative of p's identification orbit: vertical-side points
// are stored with x < W, horizontal-side points with y < H, the corner orbit
// as (0,0). Idempotent.
inline Pt identify(Pt p, const SurfaceSpec& s) {
    if (!s.in_rect(p)) throw std::domain_error("identify: point outside the closed rectangle");
    if (p.x == s.W) {
        p.x = 0;
        if (s.kind == SurfaceKind::klein) p.y = s.H - p.y;
    }
    if (p.y == s.H) p.y = 0;
    return p;
}

inline bool on_side(const Pt& p, Side side, const SurfaceSpec& s) {
    switch (side) {
        case Side::left: return p.x == 0 && p.y >= 0 && p.y <= s.H;
        case Side::right: return p.x == s.W && p.y >= 0 && p.y <= s.H;
        case Side::top: return p.y == s.H && p.x >= 0 && p.x <= s.W;
        case Side::bottom: return p.y == 0 && p.x >= 0 && p.x <= s.W;
    }
    return false;
}

// The identified point on the opposite side (non-canonical form allowed).
inline Pt transit(const Pt& p, Side side, const SurfaceSpec& s) {
    if (!on_side(p, side, s)) throw std::domain_error("transit: point not on the named side");
    bool klein = s.kind == SurfaceKind::klein;
    switch (side) {
        case Side::left: return Pt{s.W, klein ? s.H - p.y : p.y};
        case Side::right: return Pt{Rat(0), klein ? s.H - p.y : p.y};
        case Side::top: return Pt{p.x, Rat(0)};
        case Side::bottom: return Pt{p.x, s.H};
    }
    return p;
}

// Derivative of the gluing map applied to a direction carried across a side.
inline Vec transport_direction(const Vec& d, Side side, const SurfaceSpec& s) {
    if (d.is_zero()) throw std::domain_error("transport_direction: zero vector");
    if (s.kind == SurfaceKind::klein && (side == Side::left || side == Side::right))
        return Vec{d.x, -d.y};
    return d;
}

// All representatives of a canonical point within the closed rectangle
// (1 for interior, 2 on a side, 4 on the corner orbit).
inline std::vector<Pt> representatives(const Pt& canon, const SurfaceSpec& s) {
    std::vector<Pt> out{canon};
    bool klein = s.kind == SurfaceKind::klein;
    if (canon.x == 0 && canon.y == 0) {
        out.push_back(Pt{s.W, Rat(0)});
        out.push_back(Pt{Rat(0), s.H});
        out.push_back(Pt{s.W, s.H});
        return out;
    }
    if (canon.x == 0) out.push_back(Pt{s.W, klein ? s.H - canon.y : canon.y});
    if (canon.y == 0) out.push_back(Pt{canon.x, s.H});
    return out;
}

// Transport of a direction attached at representative `rep` into the tangent
// frame of the canonical representative. Identity on the torus; on the klein
// surface the deck map bringing the x = W side home reverses dy.
inline Vec transport_to_canonical(const Vec& d, const Pt& rep, const SurfaceSpec& s) {
    if (s.kind == SurfaceKind::klein && rep.x == s.W) return Vec{d.x, -d.y};
    return d;
}

// Deck transformation indices for the universal cover: apply(i,j) sends the
// fundamental domain to the tile i steps right and (for even i) j steps up.
// On the klein surface horizontal steps are glide reflections.
struct DeckStep {
    int i = 0, j = 0;

    bool operator==(const DeckStep& o) const { return i == o.i && j == o.j; }
    bool identity() const { return i == 0 && j == 0; }
};

inline Pt deck_apply(const DeckStep& g, const Pt& p, const SurfaceSpec& s) {
    Rat y = p.y;
    if (s.kind == SurfaceKind::klein && (g.i % 2 != 0)) y = s.H - y;
    return Pt{p.x + Rat(g.i) * s.W, y + Rat(g.j) * s.H};
}

inline Vec deck_apply_dir(const DeckStep& g, const Vec& v, const SurfaceSpec& s) {
    if (s.kind == SurfaceKind::klein && (g.i % 2 != 0)) return Vec{v.x, -v.y};
    return v;
}

inline DeckStep deck_compose(const DeckStep& a, const DeckStep& b, const SurfaceSpec& s) {
    // apply(result) = apply(a) after apply(b)
    bool flip = s.kind == SurfaceKind::klein && (a.i % 2 != 0);
    return DeckStep{a.i + b.i, a.j + (flip ? -b.j : b.j)};
}

inline DeckStep deck_inverse(const DeckStep& a, const SurfaceSpec& s) {
    bool flip = s.kind == SurfaceKind::klein && (a.i % 2 != 0);
    return DeckStep{-a.i, flip ? a.j : -a.j};
}

}  // namespace surfdraw
