#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace surfdraw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rat(Int(num), Int(den));
}

inline int sign(const Rat& r) { return r.sign(); }

// Lowest-terms text form: "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

// Accepts "p" or "p/q" with optional leading '-'. Returns nullopt on malformed input.
inline std::optional<Rat> parse_rat(const std::string& tok) {
    if (tok.empty()) return std::nullopt;
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(tok)) return std::nullopt;
            return Rat(Int(tok));
        }
        std::string p = tok.substr(0, slash), q = tok.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) return std::nullopt;
        Int d(q);
        if (d == 0) return std::nullopt;
        return Rat(Int(p), d);
    } catch (...) {
        return std::nullopt;
    }
}

struct Pt {
    Rat x, y;

    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
    // Lexicographic, used wherever a deterministic point order is needed.
    bool operator<(const Pt& o) const { return x != o.x ? x < o.x : y < o.y; }
};

struct Vec {
    Rat x, y;

    bool is_zero() const { return x == 0 && y == 0; }
};

inline Vec operator-(const Pt& a, const Pt& b) { return Vec{a.x - b.x, a.y - b.y}; }
inline Pt operator+(const Pt& a, const Vec& v) { return Pt{a.x + v.x, a.y + v.y}; }
inline Rat cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

inline std::string pt_to_string(const Pt& p) {
    return rat_to_string(p.x) + "," + rat_to_string(p.y);
}

// Angular order of nonzero direction vectors, counter-clockwise from the
// positive x-axis. Exact: quadrant class first, then cross product.
inline int angle_class(const Vec& v) {
    if (v.y > 0 || (v.y == 0 && v.x > 0)) return 0;  // [0, pi)
    return 1;                                        // [pi, 2pi)
}

inline bool angle_less(const Vec& a, const Vec& b) {
    int ca = angle_class(a), cb = angle_class(b);
    if (ca != cb) return ca < cb;
    return cross(a, b) > 0;
}

}  // namespace surfdraw
