#pragma once

#include <complex>
#include <initializer_list>
#include <random>
#include <vector>

#include "hpk/harmonic_fn.hpp"

namespace hpk::test {

inline AnalyticPoly poly(std::initializer_list<Complex> coeffs) {
    return AnalyticPoly(std::vector<Complex>(coeffs));
}

inline HarmonicFn fn(std::initializer_list<Complex> h,
                     std::initializer_list<Complex> g) {
    return HarmonicFn{poly(h), poly(g)};
}

// Uniform coefficients in [-box, box]^2 with the leading one resampled until
// it clears 0.1 * box, so the mathematical degree is exactly deg.
inline AnalyticPoly random_poly(std::mt19937_64& rng, int deg,
                                double box = 1.0) {
    std::uniform_real_distribution<double> u(-box, box);
    std::vector<Complex> c(static_cast<std::size_t>(deg) + 1);
    for (Complex& v : c) v = Complex(u(rng), u(rng));
    while (std::abs(c.back()) < 0.1 * box) {
        c.back() = Complex(u(rng), u(rng));
    }
    return AnalyticPoly(std::move(c));
}

inline HarmonicFn random_fn(std::mt19937_64& rng, int deg_h, int deg_g,
                            double box = 1.0) {
    return HarmonicFn{random_poly(rng, deg_h, box),
                      random_poly(rng, deg_g, box)};
}

}  // namespace hpk::test
