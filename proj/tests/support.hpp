#pragma once

#include <cmath>
#include <random>

#include "r11/clifford.hpp"
#include "r11/moebius.hpp"

namespace r11::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine{20260601};
    return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>{lo, hi}(rng()); }

inline int small_int(int lo = -5, int hi = 5) { return std::uniform_int_distribution<int>{lo, hi}(rng()); }

inline Cliff11 random_int_cliff() {
    return {double(small_int()), double(small_int()), double(small_int()), double(small_int())};
}

/// Unimodular matrix with entries of moderate size.
inline SL2R random_sl2r(double spread = 1.0) {
    for (;;) {
        const double a = uniform(-1.5, 1.5) * spread;
        const double b = uniform(-1.0, 1.0) * spread;
        const double c = uniform(-1.0, 1.0) * spread;
        if (std::abs(a) < 0.3) continue;
        return {a, b, c, (1.0 + b * c) / a};
    }
}

inline double max_diff(const Cliff11& x, const Cliff11& y) { return (x - y).max_abs(); }

inline double max_diff(const EvenNumber& x, const EvenNumber& y) { return (x - y).max_abs(); }

}  // namespace r11::testing
