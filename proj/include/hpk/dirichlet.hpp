#pragma once

#include "hpk/harmonic_fn.hpp"
#include "hpk/product.hpp"
#include "hpk/trig_poly.hpp"

namespace hpk {

// Prescribed values on the unit circle: the function on the boundary is
// phi1(theta) + i phi2(theta).
struct BoundaryData {
    RealTrigPoly phi1;
    RealTrigPoly phi2;
};

// Outcome of comparing an actual trace or identity against a claimed one on
// a uniform grid.
struct TraceReport {
    double max_deviation;  // sup of |actual - claimed| over the grid
    double argmax_theta;   // grid angle attaining the sup
    int samples;           // grid size used
};

struct DirichletSolution {
    // f = h + conj(g) with h = (G1 + G2)/2 and g = (G1 - G2)/2, so that
    // f = Re G1 + i Im G2. The real part extends phi1; the imaginary part
    // extends the conjugate function of phi2, not phi2 itself. That gap is
    // deliberate (the construction is implemented verbatim) and is what
    // audit_boundary_claims measures.
    HarmonicFn f;
    AnalyticPoly G1;  // herglotz(phi1)
    AnalyticPoly G2;  // herglotz(phi2)
};

// Analytic completion of real trig data:
//   G(z) = c_0 + 2 sum_{k>=1} c_k z^k.
// Re G is the Poisson extension of p and Im G(0) = 0.
AnalyticPoly herglotz(const RealTrigPoly& p);

// Splits the completions of phi1 and phi2 into (h, g) as above.
DirichletSolution solve_dirichlet(const BoundaryData& b);

// Trapezoid-rule Poisson integral of phi1 + i phi2 with `nodes` uniform
// angles (nodes >= 16), evaluated at |z| < 1. Spectrally accurate for trig
// polynomial data; serves as the quadrature cross-check of herglotz.
// Throws OutsideDisk for |z| >= 1.
Complex poisson_eval(const BoundaryData& b, Complex z, int nodes);

// The cofactor of the solution satisfies F = alpha Re G2 + i alpha Im G1
// exactly in the disk. Verified on a grid x grid polar lattice of interior
// points; max_deviation must sit at round-off level for every input.
TraceReport cofactor_interior_identity(const BoundaryData& b, Alpha alpha,
                                       int grid);

// The boundary value asserted for the cofactor: (alpha phi2, alpha phi1),
// i.e. the trace alpha phi2 + i alpha phi1. Recorded as data for auditing.
BoundaryData claimed_cofactor_trace(const BoundaryData& b, Alpha alpha);

// The asserted product trace is i alpha (phi1^2 + phi2^2); this returns the
// real trig polynomial alpha (phi1^2 + phi2^2), i.e. the claim divided by i.
RealTrigPoly claimed_product_trace(const BoundaryData& b, Alpha alpha);

struct ClaimAudit {
    TraceReport cofactor_report;  // |actual F trace - claimed F trace|
    TraceReport product_report;   // |actual fF trace - claimed fF trace|
};

// Evaluates the actual boundary traces of F = cofactor(solve_dirichlet(b))
// and fF = harmonic_product(...) at `samples` uniform angles (samples >= 64)
// and reports the max deviation from the claimed traces. Deviations are
// findings, never corrected.
ClaimAudit audit_boundary_claims(const BoundaryData& b, Alpha alpha,
                                 int samples);

}  // namespace hpk
