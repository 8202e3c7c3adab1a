#pragma once

#include <vector>

#include "hpk/mixed_poly.hpp"
#include "hpk/product.hpp"

namespace hpk {

// Closed curve handed to the winding counter: a circle or an axis-aligned
// rectangle, parametrized counterclockwise over t in [0, 1).
struct Contour {
    enum class Shape { Circle, Rectangle };

    static Contour circle(Complex center, double radius);
    static Contour rectangle(Complex lo, Complex hi);  // opposite corners

    Complex point(double t) const;

    Shape shape = Shape::Circle;
    Complex center;      // circle
    double radius = 0;   // circle
    Complex lo, hi;      // rectangle corners, lo < hi componentwise
};

// Change of continuous argument of A along c divided by 2*pi. Sampling
// starts at min_samples points (>= 4) and is bisected adaptively until every
// consecutive phase step is below pi/2. Throws NearZeroOnContour if |A|
// comes too close to zero on the contour to trust the phase.
long winding(const MixedPoly& A, const Contour& c, int min_samples);

// R = 1 + (sum |h coeffs below leading| + sum |g coeffs|) / |lead(h)|.
// Outside |z| < R the leading term of h dominates everything else, so all
// zeros of h + conj(g) lie inside. Requires deg h > deg g (with the zero
// polynomial counted as degree 0), else DegenerateDegrees.
double zero_search_radius(const HarmonicFn& f);

struct Zero {
    Complex location;
    long index;               // local winding index; never 0 in a report
    Orientation orientation;  // Jacobian sign at the location
    double residual;          // |f(location)|
};

struct ZeroReport {
    std::vector<Zero> zeros;        // sorted by (Re, Im) of location
    int distinct_count;             // = zeros.size()
    long count_with_multiplicity;   // = sum |index|
    long index_sum;                 // = sum index; equals deg h
    long bound;                     // (deg h)^2, or the caller's override
    bool within_bound;              // count_with_multiplicity <= bound
    double search_radius;
};

// Locates every zero of f = h + conj(g), deg h > deg g, by quadtree
// subdivision of the square around circle(0, zero_search_radius(f)) with
// certified discards, damped Newton refinement, and per-zero winding
// indices. `bound_override` replaces the default (deg h)^2 bound when
// positive (used for the 2 n^2 product bound). Throws DegenerateDegrees,
// ConstantInput (constant f), or NonIsolatedZeros when the zero set cannot
// be resolved into isolated points at tolerance tol.
ZeroReport find_zeros(const HarmonicFn& f, double tol, long bound_override = 0);

struct ProductZeros {
    ZeroReport f_report;
    ZeroReport F_report;        // cofactor zeros
    ZeroReport product_report;  // fF zeros, bound 2 (deg h)^2
    bool union_ok;              // zeros(fF) == zeros(f) u zeros(F) within 10*tol
    bool multiplicities_add;    // shared locations carry summed indices
    double max_match_distance;  // worst nearest-neighbor gap in the matching
};

// Runs find_zeros on f, cofactor(f, a), and harmonic_product(f, a), then
// verifies that the product's zero set is exactly the union of the factors'
// with indices adding at shared locations.
ProductZeros product_zeros(const HarmonicFn& f, Alpha a, double tol);

bool check_bound(const ZeroReport& report);

}  // namespace hpk
