#pragma once

#include "surfdraw/drawing.hpp"
#include "surfdraw/validate.hpp"

#include <sstream>
#include <string>

namespace surfdraw {

struct RenderStyle {
    Rat scale = 4;
    bool arrows = true;
};

namespace render_detail {

// Shortest decimal within 1e-6 of the exact value; presentation only.
inline std::string decimal(const Rat& r) {
    Rat eps(1, 1000000);
    Int pow10 = 1;
    for (int digits = 0; digits <= 7; ++digits) {
        // nearest multiple of 10^-digits
        Rat scaled = r * Rat(pow10);
        Int num = numerator(scaled), den = denominator(scaled);
        Int q = num / den, rem = num % den;
        if (rem < 0) {
            q -= 1;
            rem += den;
        }
        if (2 * rem >= den) q += 1;
        Rat approx(q, pow10);
        Rat diff = approx - r;
        if (diff < 0) diff = -diff;
        if (diff <= eps) {
            std::string digits_str = q.str();
            bool neg = !digits_str.empty() && digits_str[0] == '-';
            if (neg) digits_str = digits_str.substr(1);
            while (static_cast<int>(digits_str.size()) <= digits)
                digits_str.insert(digits_str.begin(), '0');
            std::string out = neg ? "-" : "";
            if (digits == 0) return out + digits_str;
            out += digits_str.substr(0, digits_str.size() - digits);
            out += ".";
            out += digits_str.substr(digits_str.size() - digits);
            return out;
        }
        pow10 *= 10;
    }
    return "0";  // unreachable: 1e-7 grid is always within 1e-6
}

}  // namespace render_detail

inline std::string render_svg(const Drawing& d, const ValidationReport& rep,
                              const RenderStyle& style) {
    using render_detail::decimal;
    const SurfaceSpec& s = d.surface;
    Rat sc = style.scale;
    Rat pad = 10;
    auto X = [&](const Rat& x) { return decimal(x * sc + pad); };
    // SVG y axis points down; flip so drawings read like the fixtures.
    auto Y = [&](const Rat& y) { return decimal((s.H - y) * sc + pad); };
    std::ostringstream out;
    Rat wpx = s.W * sc + 2 * pad, hpx = s.H * sc + 2 * pad;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << decimal(wpx)
        << "\" height=\"" << decimal(hpx) << "\" viewBox=\"0 0 " << decimal(wpx) << " "
        << decimal(hpx) << "\">\n";

    bool klein = s.kind == SurfaceKind::klein;
    out << "<g class=\"frame\" fill=\"none\" stroke=\"black\">\n";
    out << "<line x1=\"" << X(Rat(0)) << "\" y1=\"" << Y(Rat(0)) << "\" x2=\"" << X(s.W)
        << "\" y2=\"" << Y(Rat(0)) << "\"/>\n";
    out << "<line x1=\"" << X(Rat(0)) << "\" y1=\"" << Y(s.H) << "\" x2=\"" << X(s.W)
        << "\" y2=\"" << Y(s.H) << "\"/>\n";
    const char* dash = klein ? " stroke-dasharray=\"4 3\"" : "";
    out << "<line x1=\"" << X(Rat(0)) << "\" y1=\"" << Y(Rat(0)) << "\" x2=\"" << X(Rat(0))
        << "\" y2=\"" << Y(s.H) << "\"" << dash << "/>\n";
    out << "<line x1=\"" << X(s.W) << "\" y1=\"" << Y(Rat(0)) << "\" x2=\"" << X(s.W)
        << "\" y2=\"" << Y(s.H) << "\"" << dash << "/>\n";
    out << "</g>\n";

    if (style.arrows) {
        // Horizontal pair: same direction both sides. Vertical pair: same on
        // the torus, opposed on the klein surface.
        auto arrow = [&](const Rat& x, const Rat& y, bool up, bool right_axis) {
            std::string cls = right_axis ? "arrow-h" : "arrow-v";
            Rat a = Rat(3) / 1;
            std::ostringstream p;
            if (right_axis) {
                p << "M " << X(x - a) << " " << Y(y - a) << " L " << X(x + a) << " " << Y(y)
                  << " L " << X(x - a) << " " << Y(y + a);
            } else if (up) {
                p << "M " << X(x - a) << " " << Y(y - a) << " L " << X(x) << " " << Y(y + a)
                  << " L " << X(x + a) << " " << Y(y - a);
            } else {
                p << "M " << X(x - a) << " " << Y(y + a) << " L " << X(x) << " " << Y(y - a)
                  << " L " << X(x + a) << " " << Y(y + a);
            }
            out << "<path class=\"" << cls << "\" fill=\"none\" stroke=\"black\" d=\""
                << p.str() << "\"/>\n";
        };
        arrow(s.W / 2, Rat(0), true, true);
        arrow(s.W / 2, s.H, true, true);
        arrow(Rat(0), s.H / 2, true, false);
        arrow(s.W, s.H / 2, !klein, false);
    }

    out << "<g class=\"edges\" fill=\"none\" stroke=\"#1f4e9c\">\n";
    auto edges = d.edges;
    std::sort(edges.begin(), edges.end(), [](const EdgeCurve& a, const EdgeCurve& b) {
        if (a.u.index != b.u.index) return a.u.index < b.u.index;
        return a.v.index < b.v.index;
    });
    for (auto& e : edges) {
        for (auto& arc : e.arcs) {
            out << "<polyline class=\"edge\" points=\"";
            for (std::size_t i = 0; i < arc.size(); ++i)
                out << (i ? " " : "") << X(arc[i].x) << "," << Y(arc[i].y);
            out << "\"/>\n";
        }
    }
    out << "</g>\n";

    auto verts = d.vertices;
    std::sort(verts.begin(), verts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [id, p] : verts) {
        if (id.part == Part::A) {
            out << "<circle class=\"vertex-a\" r=\"3\" fill=\"black\" cx=\"" << X(p.x)
                << "\" cy=\"" << Y(p.y) << "\"/>\n";
        } else {
            out << "<rect class=\"vertex-b\" width=\"6\" height=\"6\" fill=\"black\" x=\""
                << decimal(p.x * sc + pad - 3) << "\" y=\""
                << decimal((s.H - p.y) * sc + pad - 3) << "\"/>\n";
        }
        out << "<text font-size=\"9\" x=\"" << X(p.x) << "\" y=\"" << Y(p.y) << "\" dx=\"4\""
            << " dy=\"-4\">" << id.name() << "</text>\n";
    }

    for (auto& c : rep.crossings) {
        out << "<path class=\"crossing\" stroke=\"#aa2222\" fill=\"none\" d=\"M "
            << decimal(c.point.x * sc + pad - 3) << " " << decimal((s.H - c.point.y) * sc + pad - 3)
            << " l 6 6 m -6 0 l 6 -6\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace surfdraw
