#pragma once

#include <complex>
#include <vector>

namespace hpk {

using Complex = std::complex<double>;

// Relative tolerance for "is this identically zero" style checks on
// coefficient data produced by exact algebra in floating point.
inline constexpr double kIdentityTol = 1e-12;

// Coefficients whose magnitude falls below this fraction of the largest
// coefficient are treated as numerical dust when trimming degrees.
inline constexpr double kTrimTol = 1e-14;

// Polynomial in z with complex coefficients, stored in ascending order.
// The zero polynomial has an empty coefficient vector and degree -1.
// Trailing coefficients that are pure round-off relative to the largest
// coefficient are trimmed on construction so degree() is meaningful.
class AnalyticPoly {
public:
    AnalyticPoly() = default;
    explicit AnalyticPoly(std::vector<Complex> coeffs);

    static AnalyticPoly constant(Complex c);
    // c * z^k, with k >= 0.
    static AnalyticPoly monomial(int k, Complex c = Complex(1.0, 0.0));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return degree() <= 0; }

    // Coefficient of z^k; zero outside the stored range.
    Complex coeff(int k) const;
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    Complex eval(Complex z) const;  // Horner
    AnalyticPoly derivative() const;
    // Coefficient-wise conjugate q with q(z) = conj(p(conj z)).
    AnalyticPoly conjugated() const;
    AnalyticPoly scaled(Complex s) const;

    double norm1() const;    // sum of |coeff|
    double max_abs() const;  // largest |coeff|, 0 for the zero polynomial

    friend AnalyticPoly operator+(const AnalyticPoly& a, const AnalyticPoly& b);
    friend AnalyticPoly operator-(const AnalyticPoly& a, const AnalyticPoly& b);
    friend AnalyticPoly operator*(const AnalyticPoly& a, const AnalyticPoly& b);

private:
    std::vector<Complex> coeffs_;
};

// Largest coefficient-wise distance between two polynomials, padding the
// shorter one with zeros. Useful for identity checks in tests.
double max_coeff_dist(const AnalyticPoly& a, const AnalyticPoly& b);

}  // namespace hpk
