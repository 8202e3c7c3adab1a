#include "hpk/dirichlet.hpp"

#include <cmath>
#include <numbers>

#include "hpk/errors.hpp"

namespace hpk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_min(int value, int min, const char* what) {
    if (value < min) {
        throw InvalidInput(std::string(what) + " must be at least " +
                           std::to_string(min));
    }
}

// Running max that remembers the first angle attaining it, so reports are
// deterministic for any evaluation order.
struct MaxTracker {
    double value = 0.0;
    double arg = 0.0;

    void update(double v, double theta) {
        if (v > value) {
            value = v;
            arg = theta;
        }
    }
};

// The cofactor and product formulas are total even though the public
// constructors refuse constant input. Auditing constant boundary data is
// still meaningful (every trace is zero), so the formulas are applied
// directly here.
HarmonicFn cofactor_formula(const HarmonicFn& f, double a) {
    return HarmonicFn{f.h.scaled(a), f.g.scaled(-a)};
}

HarmonicFn product_formula(const HarmonicFn& f, double a) {
    return HarmonicFn{(f.h * f.h).scaled(a), (f.g * f.g).scaled(-a)};
}

}  // namespace

AnalyticPoly herglotz(const RealTrigPoly& p) {
    if (p.is_zero()) return {};
    std::vector<Complex> coeffs(static_cast<std::size_t>(p.max_degree()) + 1);
    coeffs[0] = p.coeff(0);
    for (int k = 1; k <= p.max_degree(); ++k) {
        coeffs[static_cast<std::size_t>(k)] = 2.0 * p.coeff(k);
    }
    return AnalyticPoly(std::move(coeffs));
}

DirichletSolution solve_dirichlet(const BoundaryData& b) {
    DirichletSolution s;
    s.G1 = herglotz(b.phi1);
    s.G2 = herglotz(b.phi2);
    s.f.h = (s.G1 + s.G2).scaled(0.5);
    s.f.g = (s.G1 - s.G2).scaled(0.5);
    return s;
}

Complex poisson_eval(const BoundaryData& b, Complex z, int nodes) {
    require_min(nodes, 16, "poisson nodes");
    const double r = std::abs(z);
    if (r >= 1.0) {
        throw OutsideDisk("poisson evaluation needs |z| < 1");
    }
    const double theta = std::arg(z);
    double re = 0.0;
    double im = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double t = kTwoPi * j / nodes;
        const double kernel =
            (1.0 - r * r) /
            (1.0 - 2.0 * r * std::cos(theta - t) + r * r);
        re += kernel * b.phi1.eval(t);
        im += kernel * b.phi2.eval(t);
    }
    return Complex(re / nodes, im / nodes);
}

TraceReport cofactor_interior_identity(const BoundaryData& b, Alpha alpha,
                                       int grid) {
    require_min(grid, 8, "identity grid");
    const DirichletSolution s = solve_dirichlet(b);
    const HarmonicFn F = cofactor_formula(s.f, alpha.value());
    MaxTracker worst;
    for (int i = 0; i < grid; ++i) {
        const double r = static_cast<double>(i + 1) / (grid + 1);
        for (int j = 0; j < grid; ++j) {
            const double theta = kTwoPi * j / grid;
            const Complex z = std::polar(r, theta);
            const Complex lhs = F.eval(z);
            const Complex rhs =
                alpha.value() * Complex(s.G2.eval(z).real(),
                                        s.G1.eval(z).imag());
            worst.update(std::abs(lhs - rhs), theta);
        }
    }
    return TraceReport{worst.value, worst.arg, grid};
}

BoundaryData claimed_cofactor_trace(const BoundaryData& b, Alpha alpha) {
    return BoundaryData{b.phi2.scaled(alpha.value()),
                        b.phi1.scaled(alpha.value())};
}

RealTrigPoly claimed_product_trace(const BoundaryData& b, Alpha alpha) {
    return (b.phi1 * b.phi1 + b.phi2 * b.phi2).scaled(alpha.value());
}

ClaimAudit audit_boundary_claims(const BoundaryData& b, Alpha alpha,
                                 int samples) {
    require_min(samples, 64, "audit samples");
    const DirichletSolution s = solve_dirichlet(b);
    const HarmonicFn F = cofactor_formula(s.f, alpha.value());
    const HarmonicFn fF = product_formula(s.f, alpha.value());

    const BoundaryData claimed_F = claimed_cofactor_trace(b, alpha);
    const RealTrigPoly claimed_prod = claimed_product_trace(b, alpha);

    MaxTracker worst_F;
    MaxTracker worst_prod;
    for (int j = 0; j < samples; ++j) {
        const double theta = kTwoPi * j / samples;
        const Complex z = std::polar(1.0, theta);

        const Complex actual_F = F.eval(z);
        const Complex claim_F(claimed_F.phi1.eval(theta),
                              claimed_F.phi2.eval(theta));
        worst_F.update(std::abs(actual_F - claim_F), theta);

        const Complex actual_prod = fF.eval(z);
        const Complex claim_prod(0.0, claimed_prod.eval(theta));
        worst_prod.update(std::abs(actual_prod - claim_prod), theta);
    }
    return ClaimAudit{TraceReport{worst_F.value, worst_F.arg, samples},
                      TraceReport{worst_prod.value, worst_prod.arg, samples}};
}

}  // namespace hpk
