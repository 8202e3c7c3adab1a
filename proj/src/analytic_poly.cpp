#include "hpk/analytic_poly.hpp"

#include <algorithm>
#include <cmath>

#include "hpk/errors.hpp"

namespace hpk {

namespace {

void check_finite(const std::vector<Complex>& coeffs) {
    for (const Complex& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InvalidInput("polynomial coefficients must be finite");
        }
    }
}

// Drops trailing coefficients that are round-off relative to the largest
// one, so degree() reflects the mathematical degree after arithmetic.
void trim(std::vector<Complex>& coeffs) {
    double scale = 0.0;
    for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
    const double cutoff = scale * kTrimTol;
    while (!coeffs.empty() && std::abs(coeffs.back()) <= cutoff) {
        coeffs.pop_back();
    }
}

}  // namespace

AnalyticPoly::AnalyticPoly(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
    check_finite(coeffs_);
    trim(coeffs_);
}

AnalyticPoly AnalyticPoly::constant(Complex c) {
    return AnalyticPoly({c});
}

AnalyticPoly AnalyticPoly::monomial(int k, Complex c) {
    if (k < 0) throw InvalidInput("monomial power must be nonnegative");
    std::vector<Complex> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs.back() = c;
    return AnalyticPoly(std::move(coeffs));
}

Complex AnalyticPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

Complex AnalyticPoly::eval(Complex z) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

AnalyticPoly AnalyticPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    }
    return AnalyticPoly(std::move(d));
}

AnalyticPoly AnalyticPoly::conjugated() const {
    std::vector<Complex> c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(),
                   [](Complex v) { return std::conj(v); });
    return AnalyticPoly(std::move(c));
}

AnalyticPoly AnalyticPoly::scaled(Complex s) const {
    std::vector<Complex> c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(),
                   [s](Complex v) { return s * v; });
    return AnalyticPoly(std::move(c));
}

double AnalyticPoly::norm1() const {
    double sum = 0.0;
    for (const Complex& c : coeffs_) sum += std::abs(c);
    return sum;
}

double AnalyticPoly::max_abs() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

AnalyticPoly operator+(const AnalyticPoly& a, const AnalyticPoly& b) {
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    }
    return AnalyticPoly(std::move(c));
}

AnalyticPoly operator-(const AnalyticPoly& a, const AnalyticPoly& b) {
    return a + b.scaled(-1.0);
}

AnalyticPoly operator*(const AnalyticPoly& a, const AnalyticPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return AnalyticPoly(std::move(c));
}

double max_coeff_dist(const AnalyticPoly& a, const AnalyticPoly& b) {
    const int n = std::max(a.degree(), b.degree());
    double m = 0.0;
    for (int k = 0; k <= n; ++k) {
        m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
    }
    return m;
}

}  // namespace hpk
