#include "hpk/mixed_poly.hpp"

#include <algorithm>
#include <cmath>

#include "hpk/errors.hpp"

namespace hpk {

namespace {

using Matrix = std::vector<std::vector<Complex>>;

double matrix_max_abs(const Matrix& c) {
    double m = 0.0;
    for (const auto& row : c) {
        for (const Complex& v : row) m = std::max(m, std::abs(v));
    }
    return m;
}

// Trims all-dust trailing rows and columns (relative to the largest
// coefficient) and canonicalizes the zero polynomial to an empty matrix.
void trim(Matrix& c) {
    const double cutoff = matrix_max_abs(c) * kTrimTol;
    auto row_is_dust = [&](const std::vector<Complex>& row) {
        return std::all_of(row.begin(), row.end(), [&](Complex v) {
            return std::abs(v) <= cutoff;
        });
    };
    while (!c.empty() && row_is_dust(c.back())) c.pop_back();
    if (c.empty()) return;

    std::size_t cols = c[0].size();
    auto col_is_dust = [&](std::size_t k) {
        return std::all_of(c.begin(), c.end(), [&](const auto& row) {
            return std::abs(row[k]) <= cutoff;
        });
    };
    while (cols > 0 && col_is_dust(cols - 1)) --cols;
    if (cols == 0) {
        c.clear();
        return;
    }
    for (auto& row : c) row.resize(cols);
}

}  // namespace

MixedPoly::MixedPoly(Matrix c) : c_(std::move(c)) {
    const std::size_t cols = c_.empty() ? 0 : c_[0].size();
    for (const auto& row : c_) {
        if (row.size() != cols) {
            throw InvalidInput("mixed coefficient matrix must be rectangular");
        }
        for (const Complex& v : row) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw InvalidInput("mixed coefficients must be finite");
            }
        }
    }
    trim(c_);
}

MixedPoly MixedPoly::constant(Complex c) {
    return MixedPoly({{c}});
}

Complex MixedPoly::coeff(int j, int k) const {
    if (j < 0 || j > deg_z() || k < 0 || k > deg_zbar()) return {};
    return c_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
}

Complex MixedPoly::eval(Complex z) const {
    const Complex zb = std::conj(z);
    Complex acc = 0.0;
    for (auto row = c_.rbegin(); row != c_.rend(); ++row) {
        Complex inner = 0.0;
        for (auto it = row->rbegin(); it != row->rend(); ++it) {
            inner = inner * zb + *it;
        }
        acc = acc * z + inner;
    }
    return acc;
}

MixedPoly MixedPoly::scaled(Complex s) const {
    Matrix c = c_;
    for (auto& row : c) {
        for (Complex& v : row) v *= s;
    }
    return MixedPoly(std::move(c));
}

double MixedPoly::max_abs() const {
    return matrix_max_abs(c_);
}

double MixedPoly::norm1() const {
    double sum = 0.0;
    for (const auto& row : c_) {
        for (const Complex& v : row) sum += std::abs(v);
    }
    return sum;
}

MixedPoly operator+(const MixedPoly& a, const MixedPoly& b) {
    const int rows = std::max(a.deg_z(), b.deg_z()) + 1;
    const int cols = std::max(a.deg_zbar(), b.deg_zbar()) + 1;
    if (rows == 0 || cols == 0) return a.is_zero() ? b : a;
    Matrix c(static_cast<std::size_t>(rows),
             std::vector<Complex>(static_cast<std::size_t>(cols)));
    for (int j = 0; j < rows; ++j) {
        for (int k = 0; k < cols; ++k) {
            c[j][k] = a.coeff(j, k) + b.coeff(j, k);
        }
    }
    return MixedPoly(std::move(c));
}

MixedPoly operator-(const MixedPoly& a, const MixedPoly& b) {
    return a + b.scaled(-1.0);
}

MixedPoly operator*(const MixedPoly& a, const MixedPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Matrix c(static_cast<std::size_t>(a.deg_z() + b.deg_z()) + 1,
             std::vector<Complex>(
                 static_cast<std::size_t>(a.deg_zbar() + b.deg_zbar()) + 1));
    for (int ja = 0; ja <= a.deg_z(); ++ja) {
        for (int ka = 0; ka <= a.deg_zbar(); ++ka) {
            const Complex va = a.coeff(ja, ka);
            if (va == Complex{}) continue;
            for (int jb = 0; jb <= b.deg_z(); ++jb) {
                for (int kb = 0; kb <= b.deg_zbar(); ++kb) {
                    c[static_cast<std::size_t>(ja + jb)]
                     [static_cast<std::size_t>(ka + kb)] +=
                        va * b.coeff(jb, kb);
                }
            }
        }
    }
    return MixedPoly(std::move(c));
}

MixedPoly embed(const HarmonicFn& f) {
    const int rows = std::max(f.h.degree(), 0) + 1;
    const int cols = std::max(f.g.degree(), 0) + 1;
    Matrix c(static_cast<std::size_t>(rows),
             std::vector<Complex>(static_cast<std::size_t>(cols)));
    for (int j = 0; j <= f.h.degree(); ++j) {
        c[static_cast<std::size_t>(j)][0] += f.h.coeff(j);
    }
    for (int k = 0; k <= f.g.degree(); ++k) {
        c[0][static_cast<std::size_t>(k)] += std::conj(f.g.coeff(k));
    }
    return MixedPoly(std::move(c));
}

MixedPoly analytic_times_conj(const AnalyticPoly& p, const AnalyticPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    Matrix c(static_cast<std::size_t>(p.degree()) + 1,
             std::vector<Complex>(static_cast<std::size_t>(q.degree()) + 1));
    for (int j = 0; j <= p.degree(); ++j) {
        for (int k = 0; k <= q.degree(); ++k) {
            c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                p.coeff(j) * std::conj(q.coeff(k));
        }
    }
    return MixedPoly(std::move(c));
}

MixedPoly mixed_derivative(const MixedPoly& a) {
    if (a.deg_z() < 1 || a.deg_zbar() < 1) return {};
    Matrix c(static_cast<std::size_t>(a.deg_z()),
             std::vector<Complex>(static_cast<std::size_t>(a.deg_zbar())));
    for (int j = 0; j < a.deg_z(); ++j) {
        for (int k = 0; k < a.deg_zbar(); ++k) {
            c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                static_cast<double>((j + 1) * (k + 1)) * a.coeff(j + 1, k + 1);
        }
    }
    return MixedPoly(std::move(c));
}

HarmonicityCheck is_harmonic(const MixedPoly& a) {
    const double scale = a.max_abs();
    if (scale == 0.0) return {true, 0.0};
    double mixed = 0.0;
    for (int j = 1; j <= a.deg_z(); ++j) {
        for (int k = 1; k <= a.deg_zbar(); ++k) {
            mixed = std::max(mixed, std::abs(a.coeff(j, k)));
        }
    }
    const double residual = mixed / scale;
    return {residual <= kIdentityTol, residual};
}

}  // namespace hpk
