#pragma once

#include <map>
#include <vector>

#include "hpk/analytic_poly.hpp"

namespace hpk {

// Real-valued trigonometric polynomial on the circle,
//   p(theta) = sum_{|k| <= N} c_k e^{i k theta},  c_{-k} = conj(c_k).
// Only the k >= 0 half is stored; c_0 is kept real. Reality is an invariant
// of the type, enforced at construction.
class RealTrigPoly {
public:
    RealTrigPoly() = default;  // identically zero

    static RealTrigPoly constant(double c);
    static RealTrigPoly cosine(int k, double amplitude = 1.0);  // a cos(k theta)
    static RealTrigPoly sine(int k, double amplitude = 1.0);    // a sin(k theta)

    // Builds from a two-sided coefficient map. Every pair (k, -k) present
    // must satisfy c_{-k} = conj(c_k) within round-off, and c_0 must be real;
    // if only one of k, -k is given the mirror is implied. Violations raise
    // InvalidBoundaryData.
    static RealTrigPoly from_coeffs(const std::map<int, Complex>& c);

    // c_k for any integer k (conjugate mirror for k < 0, zero off range).
    Complex coeff(int k) const;
    // Largest |k| with c_k != 0; -1 when identically zero.
    int max_degree() const;
    bool is_zero() const { return c_.empty(); }

    double eval(double theta) const;

    RealTrigPoly scaled(double s) const;
    friend RealTrigPoly operator+(const RealTrigPoly& a, const RealTrigPoly& b);
    friend RealTrigPoly operator-(const RealTrigPoly& a, const RealTrigPoly& b);
    // Pointwise product; frequencies convolve.
    friend RealTrigPoly operator*(const RealTrigPoly& a, const RealTrigPoly& b);

    double max_abs() const;

private:
    void set_half(int k, Complex c);  // k >= 0, no validation
    void trim();

    std::vector<Complex> c_;  // c_[k] holds c_k for k >= 0
};

// Harmonic conjugate trace: the boundary values of the conjugate harmonic
// function (normalized to mean zero). Frequency k maps to -i sign(k) c_k.
RealTrigPoly conjugate_trace(const RealTrigPoly& p);

}  // namespace hpk
