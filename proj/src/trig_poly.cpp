#include "hpk/trig_poly.hpp"

#include <algorithm>
#include <cmath>

#include "hpk/errors.hpp"

namespace hpk {

namespace {

void check_finite(Complex c) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw InvalidBoundaryData("trig coefficients must be finite");
    }
}

}  // namespace

void RealTrigPoly::set_half(int k, Complex c) {
    if (c_.size() <= static_cast<std::size_t>(k)) {
        c_.resize(static_cast<std::size_t>(k) + 1);
    }
    c_[static_cast<std::size_t>(k)] = c;
}

void RealTrigPoly::trim() {
    double scale = 0.0;
    for (const Complex& c : c_) scale = std::max(scale, std::abs(c));
    const double cutoff = scale * kTrimTol;
    while (!c_.empty() && std::abs(c_.back()) <= cutoff) c_.pop_back();
}

RealTrigPoly RealTrigPoly::constant(double c) {
    RealTrigPoly p;
    p.set_half(0, c);
    p.trim();
    return p;
}

RealTrigPoly RealTrigPoly::cosine(int k, double amplitude) {
    if (k < 0) throw InvalidBoundaryData("cosine frequency must be >= 0");
    RealTrigPoly p;
    if (k == 0) return constant(amplitude);
    p.set_half(k, Complex(amplitude / 2.0, 0.0));
    p.trim();
    return p;
}

RealTrigPoly RealTrigPoly::sine(int k, double amplitude) {
    if (k <= 0) throw InvalidBoundaryData("sine frequency must be >= 1");
    RealTrigPoly p;
    // a sin(k t) = (a / 2i) e^{ikt} + conj: c_k = -i a / 2.
    p.set_half(k, Complex(0.0, -amplitude / 2.0));
    p.trim();
    return p;
}

RealTrigPoly RealTrigPoly::from_coeffs(const std::map<int, Complex>& c) {
    RealTrigPoly p;
    for (const auto& [k, v] : c) {
        check_finite(v);
        if (k < 0) continue;
        if (k == 0 && std::abs(v.imag()) > kIdentityTol * (1.0 + std::abs(v))) {
            throw InvalidBoundaryData("constant coefficient must be real");
        }
        p.set_half(k, k == 0 ? Complex(v.real(), 0.0) : v);
    }
    // Negative frequencies either mirror a stored value (must match its
    // conjugate) or define one.
    for (const auto& [k, v] : c) {
        check_finite(v);
        if (k >= 0) continue;
        const Complex mirror = std::conj(v);
        if (c.count(-k)) {
            const Complex have = p.coeff(-k);
            if (std::abs(have - mirror) >
                kIdentityTol * (1.0 + std::abs(have) + std::abs(mirror))) {
                throw InvalidBoundaryData(
                    "coefficients violate Hermitian symmetry c[-k] = conj(c[k])");
            }
        } else {
            p.set_half(-k, mirror);
        }
    }
    p.trim();
    return p;
}

Complex RealTrigPoly::coeff(int k) const {
    const std::size_t idx = static_cast<std::size_t>(k < 0 ? -k : k);
    if (idx >= c_.size()) return {};
    return k < 0 ? std::conj(c_[idx]) : c_[idx];
}

int RealTrigPoly::max_degree() const {
    return static_cast<int>(c_.size()) - 1;
}

double RealTrigPoly::eval(double theta) const {
    if (c_.empty()) return 0.0;
    // c_0 + 2 Re(sum_{k>=1} c_k e^{ik theta}), summed by Horner in e^{i t}.
    const Complex w = std::polar(1.0, theta);
    Complex acc = 0.0;
    for (std::size_t k = c_.size(); k-- > 1;) {
        acc = (acc + c_[k]) * w;
    }
    return c_[0].real() + 2.0 * acc.real();
}

RealTrigPoly RealTrigPoly::scaled(double s) const {
    RealTrigPoly p;
    p.c_ = c_;
    for (Complex& v : p.c_) v *= s;
    p.trim();
    return p;
}

RealTrigPoly operator+(const RealTrigPoly& a, const RealTrigPoly& b) {
    RealTrigPoly p;
    const int n = std::max(a.max_degree(), b.max_degree());
    for (int k = n; k >= 0; --k) p.set_half(k, a.coeff(k) + b.coeff(k));
    p.trim();
    return p;
}

RealTrigPoly operator-(const RealTrigPoly& a, const RealTrigPoly& b) {
    return a + b.scaled(-1.0);
}

RealTrigPoly operator*(const RealTrigPoly& a, const RealTrigPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int na = a.max_degree();
    const int nb = b.max_degree();
    RealTrigPoly p;
    // Two-sided frequency convolution, keeping only k >= 0 (the negative
    // half is determined by symmetry).
    for (int k = na + nb; k >= 0; --k) {
        Complex sum = 0.0;
        for (int j = -na; j <= na; ++j) {
            const int m = k - j;
            if (m < -nb || m > nb) continue;
            sum += a.coeff(j) * b.coeff(m);
        }
        if (k == 0) sum = Complex(sum.real(), 0.0);
        p.set_half(k, sum);
    }
    p.trim();
    return p;
}

double RealTrigPoly::max_abs() const {
    double m = 0.0;
    for (const Complex& c : c_) m = std::max(m, std::abs(c));
    return m;
}

RealTrigPoly conjugate_trace(const RealTrigPoly& p) {
    std::map<int, Complex> c;
    for (int k = 1; k <= p.max_degree(); ++k) {
        c[k] = Complex(0.0, -1.0) * p.coeff(k);
    }
    return RealTrigPoly::from_coeffs(c);
}

}  // namespace hpk
