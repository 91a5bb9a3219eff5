#pragma once

#include "surfdraw/drawing.hpp"

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace testutil {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline surfdraw::Drawing load_fixture(const std::string& rel) {
    return surfdraw::parse_drawing(slurp(std::string(FIXTURES_DIR) + "/" + rel));
}

inline surfdraw::Drawing load_testdata(const std::string& rel) {
    return surfdraw::parse_drawing(slurp(std::string(TESTDATA_DIR) + "/" + rel));
}

// Deterministic across platforms: raw engine output with modulo reduction.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::uint64_t next() { return gen(); }
    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    surfdraw::Rat rat(int lo, int hi, int maxden) {
        int den = uniform(1, maxden);
        int num = uniform(lo * den, hi * den);
        return surfdraw::Rat(num, den);
    }
    surfdraw::Pt point(int w, int h, int maxden) {
        return surfdraw::Pt{rat(0, w, maxden), rat(0, h, maxden)};
    }
};

}  // namespace testutil
