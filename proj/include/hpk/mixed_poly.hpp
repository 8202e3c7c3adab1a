#pragma once

#include <vector>

#include "hpk/harmonic_fn.hpp"

namespace hpk {

// Bivariate polynomial in z and conj(z): sum_{j,k} c[j][k] z^j conj(z)^k.
// The coefficient matrix is rectangular with rows indexed by the power of z.
// This is the algebra where pointwise products of harmonic functions live;
// such a polynomial is harmonic exactly when no genuinely mixed monomial
// (j >= 1 and k >= 1) survives.
class MixedPoly {
public:
    MixedPoly() = default;  // the zero polynomial
    explicit MixedPoly(std::vector<std::vector<Complex>> c);

    static MixedPoly constant(Complex c);

    int deg_z() const { return static_cast<int>(c_.size()) - 1; }
    int deg_zbar() const {
        return c_.empty() ? -1 : static_cast<int>(c_[0].size()) - 1;
    }
    bool is_zero() const { return c_.empty(); }

    Complex coeff(int j, int k) const;
    const std::vector<std::vector<Complex>>& rows() const { return c_; }

    // Nested Horner: inner rows at conj(z), outer sum in z.
    Complex eval(Complex z) const;
    MixedPoly scaled(Complex s) const;

    double max_abs() const;
    double norm1() const;

    friend MixedPoly operator+(const MixedPoly& a, const MixedPoly& b);
    friend MixedPoly operator-(const MixedPoly& a, const MixedPoly& b);
    // 2D coefficient convolution; degrees add.
    friend MixedPoly operator*(const MixedPoly& a, const MixedPoly& b);

private:
    std::vector<std::vector<Complex>> c_;
};

// Injects h + conj(g) into the mixed algebra: column 0 carries h, row 0
// carries the conjugated coefficients of g, and the constant cell is
// h(0) + conj(g(0)).
MixedPoly embed(const HarmonicFn& f);

// p(z) * conj(q(z)) as a mixed polynomial with c[j][k] = p_j conj(q_k).
MixedPoly analytic_times_conj(const AnalyticPoly& p, const AnalyticPoly& q);

// d^2/dz dzbar. In coefficient form: c'[j][k] = (j+1)(k+1) c[j+1][k+1].
MixedPoly mixed_derivative(const MixedPoly& a);

struct HarmonicityCheck {
    bool harmonic;    // residual <= kIdentityTol
    double residual;  // max mixed |c[j][k]| (j,k >= 1) over max |c|
};

// Structural harmonicity test: the largest coefficient sitting on a mixed
// monomial, relative to the largest coefficient overall. The zero polynomial
// is harmonic with residual 0.
HarmonicityCheck is_harmonic(const MixedPoly& a);

}  // namespace hpk
