#include "hpk/harmonic_fn.hpp"

#include <cmath>

#include "hpk/errors.hpp"

namespace hpk {

double jacobian(const HarmonicFn& f, Complex z) {
    const double a = std::abs(f.h.derivative().eval(z));
    const double b = std::abs(f.g.derivative().eval(z));
    return a * a - b * b;
}

Orientation classify_orientation(const HarmonicFn& f, Complex z) {
    const double a = std::abs(f.h.derivative().eval(z));
    const double b = std::abs(f.g.derivative().eval(z));
    const double J = a * a - b * b;
    const double tol = kIdentityTol * (1.0 + a * a + b * b);
    if (J > tol) return Orientation::SensePreserving;
    if (J < -tol) return Orientation::SenseReversing;
    return Orientation::Singular;
}

RationalFn dilatation(const HarmonicFn& f) {
    AnalyticPoly hp = f.h.derivative();
    if (hp.is_zero()) {
        throw ConstantAnalyticPart(
            "dilatation g'/h' is undefined for constant analytic part");
    }
    return RationalFn{f.g.derivative(), hp};
}

}  // namespace hpk
