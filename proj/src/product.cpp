#include "hpk/product.hpp"

#include <cmath>

#include "hpk/errors.hpp"

namespace hpk {

Alpha::Alpha(double value) : value_(value) {
    if (!std::isfinite(value) || value == 0.0) {
        throw InvalidAlpha("alpha must be a nonzero real");
    }
}

SquareVerdict square_is_harmonic(const HarmonicFn& f) {
    const MixedPoly e = embed(f);
    const MixedPoly square = e * e;
    const HarmonicityCheck check = is_harmonic(square);
    SquareVerdict v;
    v.harmonic = check.harmonic;
    v.mixed_residual = check.residual;
    v.witness = mixed_derivative(square);
    v.degree_criterion = f.h.is_constant() || f.g.is_constant();
    return v;
}

namespace {

void require_nonconstant(const HarmonicFn& f, const char* op) {
    if (f.is_constant()) {
        throw ConstantInput(std::string(op) + " requires a nonconstant function");
    }
}

}  // namespace

HarmonicFn cofactor(const HarmonicFn& f, Alpha alpha) {
    require_nonconstant(f, "cofactor");
    return HarmonicFn{f.h.scaled(alpha.value()), f.g.scaled(-alpha.value())};
}

HarmonicFn harmonic_product(const HarmonicFn& f, Alpha alpha) {
    require_nonconstant(f, "harmonic_product");
    return HarmonicFn{(f.h * f.h).scaled(alpha.value()),
                      (f.g * f.g).scaled(-alpha.value())};
}

ProductVerdict product_is_harmonic(const HarmonicFn& f, const HarmonicFn& F) {
    const HarmonicityCheck check = is_harmonic(embed(f) * embed(F));

    ProductVerdict v;
    v.harmonic = check.harmonic;
    v.mixed_residual = check.residual;
    v.k_poly = analytic_times_conj(f.h, F.g) + analytic_times_conj(F.h, f.g);

    // k is typically a near-total cancellation, so constancy is judged
    // against the size of the terms that formed it, not against max|k|.
    const double scale =
        f.h.norm1() * F.g.norm1() + F.h.norm1() * f.g.norm1();
    double nonconstant = 0.0;
    for (int j = 0; j <= v.k_poly.deg_z(); ++j) {
        for (int k = 0; k <= v.k_poly.deg_zbar(); ++k) {
            if (j == 0 && k == 0) continue;
            nonconstant = std::max(nonconstant, std::abs(v.k_poly.coeff(j, k)));
        }
    }
    v.k_constant = scale == 0.0 || nonconstant <= kIdentityTol * scale;
    return v;
}

bool dilatation_negation_check(const HarmonicFn& f, const HarmonicFn& F) {
    const AnalyticPoly hp = f.h.derivative();
    const AnalyticPoly Hp = F.h.derivative();
    if (hp.is_zero() || Hp.is_zero()) {
        throw ConstantAnalyticPart(
            "dilatation negation needs both analytic parts nonconstant");
    }
    const AnalyticPoly gp = f.g.derivative();
    const AnalyticPoly Gp = F.g.derivative();

    // omega_f = -omega_F cross-multiplies to g' H' + G' h' = 0.
    const AnalyticPoly lhs = gp * Hp + Gp * hp;
    const double scale = gp.norm1() * Hp.norm1() + Gp.norm1() * hp.norm1();
    return scale == 0.0 || lhs.max_abs() <= kIdentityTol * scale;
}

}  // namespace hpk
