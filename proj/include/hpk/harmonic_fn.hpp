#pragma once

#include "hpk/analytic_poly.hpp"

namespace hpk {

// Planar harmonic function f = h + conj(g) with analytic polynomials h, g.
// The decomposition is canonical up to the constant of g; we keep whatever
// constants the caller supplies.
struct HarmonicFn {
    AnalyticPoly h;
    AnalyticPoly g;

    Complex eval(Complex z) const {
        return h.eval(z) + std::conj(g.eval(z));
    }

    // Wirtinger derivatives: f_z = h', f_zbar = conj(g').
    Complex dz(Complex z) const { return h.derivative().eval(z); }
    Complex dzbar(Complex z) const { return std::conj(g.derivative().eval(z)); }

    bool is_constant() const { return h.is_constant() && g.is_constant(); }
};

enum class Orientation {
    SensePreserving,  // Jacobian > 0
    SenseReversing,   // Jacobian < 0
    Singular,         // Jacobian = 0 (within round-off of the coefficient scale)
};

// Jacobian determinant |h'(z)|^2 - |g'(z)|^2 of f as a planar map.
double jacobian(const HarmonicFn& f, Complex z);

// Sign of the Jacobian at z, with a zero band scaled to the size of the
// derivative coefficients so "singular" is robust to round-off.
Orientation classify_orientation(const HarmonicFn& f, Complex z);

// Formal quotient of analytic polynomials. No common-factor reduction is
// attempted; den is guaranteed nonzero as a polynomial.
struct RationalFn {
    AnalyticPoly num;
    AnalyticPoly den;

    Complex eval(Complex z) const { return num.eval(z) / den.eval(z); }
};

// Second complex dilatation w = g'/h'. Requires h nonconstant.
RationalFn dilatation(const HarmonicFn& f);

}  // namespace hpk
