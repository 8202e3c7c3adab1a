#include "hpk/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "hpk/errors.hpp"

namespace hpk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kSqrt2 = std::numbers::sqrt2;

// Samples below this fraction of the largest sampled magnitude are treated
// as "on top of a zero" by the winding counter.
constexpr double kContourFloor = 1e-11;

// Bisection depth for one initial winding segment. 48 halvings take a unit
// parameter interval below double resolution, so hitting the limit means
// the phase genuinely refuses to settle.
constexpr int kMaxBisect = 48;

std::string complex_str(Complex z) {
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
           ")";
}

// Phase change along one contour segment, bisecting until each piece turns
// by less than pi/2. Throws when a midpoint sample lands at (numerical)
// zero or the segment cannot settle within the depth budget.
template <typename Eval>
double wind_segment(const Eval& gamma, double t0, Complex v0, double t1,
                    Complex v1, double floor, int depth) {
    const double step = std::arg(v1 / v0);
    if (std::abs(step) < kHalfPi) return step;
    if (depth <= 0) {
        throw NearZeroOnContour("phase step did not settle under bisection");
    }
    const double tm = 0.5 * (t0 + t1);
    const Complex vm = gamma(tm);
    if (!(std::abs(vm) > floor)) {
        throw NearZeroOnContour("contour passes too close to a zero");
    }
    return wind_segment(gamma, t0, v0, tm, vm, floor, depth - 1) +
           wind_segment(gamma, tm, vm, t1, v1, floor, depth - 1);
}

// Winding number of gamma over t in [0, 1). The near-zero floor is relative
// to the largest sampled magnitude, so contours of any absolute scale work.
template <typename Eval>
long winding_of(const Eval& gamma, int min_samples) {
    const int n = std::max(min_samples, 4);
    std::vector<Complex> v(static_cast<std::size_t>(n));
    double max_mag = 0.0;
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = gamma(static_cast<double>(i) / n);
        max_mag = std::max(max_mag, std::abs(v[static_cast<std::size_t>(i)]));
    }
    if (max_mag == 0.0) {
        throw NearZeroOnContour("function vanishes on the whole contour");
    }
    const double floor = max_mag * kContourFloor;
    for (const Complex& s : v) {
        if (!(std::abs(s) > floor)) {
            throw NearZeroOnContour("contour sample too close to a zero");
        }
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t0 = static_cast<double>(i) / n;
        const double t1 = static_cast<double>(i + 1) / n;
        const Complex v1 = v[static_cast<std::size_t>((i + 1) % n)];
        total += wind_segment(gamma, t0, v[static_cast<std::size_t>(i)], t1,
                              v1, floor, kMaxBisect);
    }
    const double w = total / kTwoPi;
    const long iw = std::lround(w);
    if (std::abs(w - iw) > 0.25) {
        throw NearZeroOnContour("winding did not close up to an integer");
    }
    return iw;
}

// Upper bounds for |f|, |f_z| + |f_zbar|, and |f_zz| + |f_zbzb| on |z| <= r,
// from absolute coefficient sums. Cheap, rigorous up to round-off, and the
// backbone of the certified box discards below.
struct CoeffBounds {
    std::vector<double> ah;  // |h_j|
    std::vector<double> ag;  // |g_k|

    explicit CoeffBounds(const HarmonicFn& f) {
        for (const Complex& c : f.h.coeffs()) ah.push_back(std::abs(c));
        for (const Complex& c : f.g.coeffs()) ag.push_back(std::abs(c));
    }

    static double poly(const std::vector<double>& a, double r, int order) {
        double sum = 0.0;
        double rp = 1.0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            const auto jj = static_cast<double>(j);
            double factor = 1.0;
            if (order >= 1) factor *= jj;
            if (order >= 2) factor *= jj - 1.0;
            if (static_cast<int>(j) >= order) {
                sum += factor * a[j] * rp;
                rp *= r;
            }
        }
        return sum;
    }

    double value(double r) const { return poly(ah, r, 0) + poly(ag, r, 0); }
    double grad(double r) const { return poly(ah, r, 1) + poly(ag, r, 1); }
    double hess(double r) const { return poly(ah, r, 2) + poly(ag, r, 2); }

    struct All {
        double value, grad, hess;
    };

    // One pass over each coefficient list for all three bounds; the box
    // certificate needs the trio on every box, which makes this the single
    // hottest bound computation.
    All all(double r) const {
        All out{0.0, 0.0, 0.0};
        accumulate(ah, r, out);
        accumulate(ag, r, out);
        return out;
    }

  private:
    static void accumulate(const std::vector<double>& a, double r, All& out) {
        double rp = 1.0;        // r^j
        double rp1 = 0.0;       // r^(j-1)
        double rp2 = 0.0;       // r^(j-2)
        for (std::size_t j = 0; j < a.size(); ++j) {
            const auto jj = static_cast<double>(j);
            out.value += a[j] * rp;
            out.grad += jj * a[j] * rp1;
            out.hess += jj * (jj - 1.0) * a[j] * rp2;
            rp2 = rp1;
            rp1 = rp;
            rp *= r;
        }
    }
};

struct Box {
    double cx, cy, half;

    Complex center() const { return {cx, cy}; }
    double rho() const { return half * kSqrt2; }  // center-to-corner
    double min_abs() const {
        const double dx = std::max(std::abs(cx) - half, 0.0);
        const double dy = std::max(std::abs(cy) - half, 0.0);
        return std::hypot(dx, dy);
    }
    double max_abs() const {
        return std::hypot(std::abs(cx) + half, std::abs(cy) + half);
    }
};

struct Found {
    Complex z;
    double residual;
    double kill;  // radius of the certified zero-free ball around z
};

struct NewtonOutcome {
    Complex z;
    double residual;
    bool converged;
};

// Damped Newton iteration on the 2x2 real system (Re f, Im f) written in
// complex form: the exact solve of a*d + b*conj(d) = -f when the Jacobian
// is invertible, with a dominant-part fallback near J = 0 (which covers
// analytic multiple zeros and fold points at linear rate). The residual
// goal carries a position-dependent noise floor: far from the origin the
// evaluation cancels catastrophically and the best reachable residual is
// roundoff times the coefficient-sum bound, not the nominal tolerance.
NewtonOutcome newton_refine(const HarmonicFn& f, const AnalyticPoly& hp,
                            const AnalyticPoly& gp,
                            const CoeffBounds& bounds, Complex z0, double tol,
                            double res_scale, double leash) {
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    Complex z = z0;
    Complex fz = f.eval(z);
    double res = std::abs(fz);
    const auto res_goal = [&](Complex at) {
        return tol * res_scale + 16.0 * kEps * bounds.value(std::abs(at));
    };

    double window[8];
    for (double& w : window) w = res;

    for (int iter = 0; iter < 80; ++iter) {
        // A probe is only responsible for zeros near its own box; once the
        // iterate strays, some other box covers wherever it is headed.
        if (std::abs(z - z0) > leash) return {z, res, false};

        // Slow creep down a positive valley floor is the expensive failure
        // mode; genuine basins at worst halve the residual every few steps.
        if (iter >= 8 && res > 0.5 * window[iter % 8]) {
            return {z, res, res < res_goal(z)};
        }
        window[iter % 8] = res;

        const Complex a = hp.eval(z);
        const Complex b = std::conj(gp.eval(z));
        const double J = std::norm(a) - std::norm(b);
        const double deriv_scale = std::norm(a) + std::norm(b);

        Complex delta;
        if (deriv_scale == 0.0) return {z, res, false};
        if (std::abs(J) > 1e-6 * deriv_scale) {
            delta = (b * std::conj(fz) - std::conj(a) * fz) / J;
        } else if (std::abs(a) >= std::abs(b)) {
            delta = -fz / a;
        } else {
            delta = -std::conj(fz / b);
        }

        // Never step further than a box-scale jump; huge steps only occur
        // with near-singular Jacobians and damping would waste evals.
        const double cap = 0.5 * (1.0 + std::abs(z));
        if (std::abs(delta) > cap) delta *= cap / std::abs(delta);

        Complex z_next = z + delta;
        Complex f_next = f.eval(z_next);
        int halvings = 0;
        while (std::abs(f_next) >= res && halvings < 20) {
            delta *= 0.5;
            z_next = z + delta;
            f_next = f.eval(z_next);
            ++halvings;
        }
        if (halvings == 20 && std::abs(f_next) >= res) {
            return {z, res, res < res_goal(z)};
        }

        z = z_next;
        fz = f_next;
        res = std::abs(fz);
        if (std::abs(delta) < tol && res < res_goal(z)) return {z, res, true};
    }
    return {z, res, res < res_goal(z)};
}

// Radius of a ball around a refined zero certified to contain no other
// non-mergeable zero: from |f(z)| >= sigma*rho - M2/2*rho^2 - res with
// sigma the smallest singular value of the Jacobian and M2 a local Hessian
// bound. When the inner root of that quadratic is below the merge radius,
// the whole ball up to the outer root is safe to discard.
double kill_radius(const AnalyticPoly& hp, const AnalyticPoly& gp,
                   const CoeffBounds& bounds, Complex z, double residual,
                   double tol, double min_box) {
    const double merge = 10.0 * tol;
    const double fallback = std::max(20.0 * tol, 2.0 * min_box);

    const double a = std::abs(hp.eval(z));
    const double b = std::abs(gp.eval(z));
    const double sigma = std::abs(a - b);
    if (sigma <= 0.0) return fallback;

    // The Hessian bound grows fast with the trial ball, so a wide ball can
    // certify less than a narrow one. Walk a short ladder of trial radii
    // and keep the best certified ball; each rung is sound on its own.
    double best = 0.0;
    double trial = 0.5 * (1.0 + std::abs(z));
    for (int rung = 0; rung < 6; ++rung, trial *= 0.25) {
        const double m2 = bounds.hess(std::abs(z) + trial);

        double inner, outer;
        if (m2 <= 0.0) {
            inner = residual / sigma;
            outer = trial;
        } else {
            const double disc = sigma * sigma - 2.0 * m2 * residual;
            if (disc <= 0.0) continue;
            const double root = std::sqrt(disc);
            inner = 2.0 * residual / (sigma + root);
            outer = std::min((sigma + root) / m2, trial);
        }
        if (inner > merge) continue;
        best = std::max(best, outer);
    }
    return std::max(std::max(best, fallback), 2.0 * min_box);
}

int effective_degree(const AnalyticPoly& p) {
    return std::max(p.degree(), 0);
}

// Fujiwara-style enclosing radius: for |z| > 2 * max_j (a_j/|lead|)^(1/(n-j))
// with a_j the combined absolute coefficients of h and g at order j, the
// leading term of h dominates the rest, so no zeros live out there. Often
// orders of magnitude tighter than the linear coefficient-sum radius when
// the leading coefficient is small; the subdivision starts from whichever
// bound is smaller.
double fujiwara_radius(const HarmonicFn& f) {
    const int n = f.h.degree();
    const double lead = std::abs(f.h.coeff(n));
    double m = 0.0;
    for (int j = 0; j < n; ++j) {
        const double aj = std::abs(f.h.coeff(j)) + std::abs(f.g.coeff(j));
        if (aj > 0.0) {
            m = std::max(m, std::pow(aj / lead, 1.0 / (n - j)));
        }
    }
    return 2.0 * m;
}

void require_dominant_degrees(const HarmonicFn& f) {
    if (f.is_constant()) {
        throw ConstantInput("zero search needs a nonconstant function");
    }
    if (effective_degree(f.h) <= effective_degree(f.g)) {
        throw DegenerateDegrees(
            "zero search requires deg h > deg g (deg h = " +
            std::to_string(f.h.degree()) +
            ", deg g = " + std::to_string(f.g.degree()) + ")");
    }
}

}  // namespace

Contour Contour::circle(Complex center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw InvalidInput("contour radius must be positive");
    }
    Contour c;
    c.shape = Shape::Circle;
    c.center = center;
    c.radius = radius;
    return c;
}

Contour Contour::rectangle(Complex lo, Complex hi) {
    if (!(lo.real() < hi.real()) || !(lo.imag() < hi.imag())) {
        throw InvalidInput("rectangle needs lo < hi in both coordinates");
    }
    Contour c;
    c.shape = Shape::Rectangle;
    c.lo = lo;
    c.hi = hi;
    return c;
}

Complex Contour::point(double t) const {
    t -= std::floor(t);
    if (shape == Shape::Circle) {
        return center + std::polar(radius, kTwoPi * t);
    }
    // Counterclockwise perimeter walk, parametrized by arc length.
    const double w = hi.real() - lo.real();
    const double h = hi.imag() - lo.imag();
    const double per = 2.0 * (w + h);
    double s = t * per;
    if (s < w) return {lo.real() + s, lo.imag()};
    s -= w;
    if (s < h) return {hi.real(), lo.imag() + s};
    s -= h;
    if (s < w) return {hi.real() - s, hi.imag()};
    s -= w;
    return {lo.real(), hi.imag() - s};
}

long winding(const MixedPoly& A, const Contour& c, int min_samples) {
    if (min_samples < 4) {
        throw InvalidInput("winding needs at least 4 samples");
    }
    return winding_of([&](double t) { return A.eval(c.point(t)); },
                      min_samples);
}

double zero_search_radius(const HarmonicFn& f) {
    require_dominant_degrees(f);
    const int n = f.h.degree();
    const double lead = std::abs(f.h.coeff(n));
    double sum = f.g.norm1();
    for (int j = 0; j < n; ++j) sum += std::abs(f.h.coeff(j));
    return 1.0 + sum / lead;
}

ZeroReport find_zeros(const HarmonicFn& f, double tol, long bound_override) {
    require_dominant_degrees(f);
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw InvalidInput("tolerance must be positive");
    }

    const double R = zero_search_radius(f);
    const double start = std::min(R, std::max(fujiwara_radius(f), 1e-3));
    const int n = f.h.degree();
    const AnalyticPoly hp = f.h.derivative();
    const AnalyticPoly gp = f.g.derivative();
    const CoeffBounds bounds(f);
    const double res_scale = 1.0 + f.h.norm1() + f.g.norm1();
    const double min_box = 1e-8 * start;
    const double merge = 10.0 * tol;
    const double eval_noise =
        16.0 * std::numeric_limits<double>::epsilon();

    std::vector<Found> found;
    std::vector<Box> parked;
    std::deque<Box> queue;
    queue.push_back(Box{0.0, 0.0, start});

    long budget = 1'000'000;
    while (!queue.empty()) {
        if (--budget < 0) {
            throw NonIsolatedZeros("subdivision budget exhausted");
        }
        const Box box = queue.front();
        queue.pop_front();

        // All zeros live inside both enclosing radii.
        if (box.min_abs() > start) continue;

        const Complex c = box.center();
        const double rho = box.rho();

        bool killed = false;
        double nearest_found = std::numeric_limits<double>::infinity();
        for (const Found& fz : found) {
            const double d = std::abs(c - fz.z);
            nearest_found = std::min(nearest_found, d);
            if (d + rho <= fz.kill) {
                killed = true;
                break;
            }
        }
        if (killed) continue;

        // Certified nonvanishing: |f| on the box is at least
        // |f(center)| - sup|grad| * rho, with the gradient bounded either
        // globally (coefficient sums) or locally (gradient at the center
        // plus a curvature term), whichever is sharper. The noise addend
        // keeps a center value that is pure round-off from certifying.
        const double rmax = box.max_abs();
        const double fc = std::abs(f.eval(c));
        const CoeffBounds::All at_rmax = bounds.all(rmax);
        const double noise = eval_noise * at_rmax.value;
        if (fc > at_rmax.grad * rho * (1.0 + 1e-12) + noise) {
            continue;
        }
        // The global gradient bound could not clear the box; retry with the
        // gradient at the center plus a curvature term, which is much
        // sharper at mid scales (and costs two derivative evaluations).
        const double grad_center =
            std::abs(hp.eval(c)) + std::abs(gp.eval(c));
        const double lip = grad_center + rho * at_rmax.hess;
        if (fc > lip * rho * (1.0 + 1e-12) + noise) {
            continue;
        }

        // Newton probe. Skipped when a known zero is close enough that the
        // probe would just re-converge to it, or when the first Newton step
        // could not plausibly stay near this box (large boxes far from any
        // zero fail the certificate too, but are not worth iterating on).
        const bool plausible =
            fc <= 2.0 * rho * grad_center || fc <= 16.0 * noise;
        if (plausible && nearest_found > 6.0 * rho) {
            const NewtonOutcome out = newton_refine(f, hp, gp, bounds, c, tol,
                                                    res_scale, 8.0 * rho);
            if (out.converged && std::abs(out.z) <= start * (1.0 + 1e-6) + tol) {
                bool duplicate = false;
                for (const Found& fz : found) {
                    if (std::abs(out.z - fz.z) <= merge) {
                        duplicate = true;
                        break;
                    }
                }
                if (!duplicate) {
                    const double kill =
                        kill_radius(hp, gp, bounds, out.z, out.residual,
                                    tol, min_box);
                    found.push_back(Found{out.z, out.residual, kill});
                }
            }
        }

        if (2.0 * box.half < min_box) {
            parked.push_back(box);
            continue;
        }
        const double h2 = box.half * 0.5;
        queue.push_back(Box{box.cx - h2, box.cy - h2, h2});
        queue.push_back(Box{box.cx + h2, box.cy - h2, h2});
        queue.push_back(Box{box.cx - h2, box.cy + h2, h2});
        queue.push_back(Box{box.cx + h2, box.cy + h2, h2});
    }

    // Parked boxes are leftovers at minimum size. Ones hugging a located
    // zero are expected (the nonvanishing certificate cannot fire there);
    // anything else means structure below resolution.
    const double park_slack = std::max(8.0 * min_box, 100.0 * tol);
    for (const Box& box : parked) {
        double d = std::numeric_limits<double>::infinity();
        for (const Found& fz : found) d = std::min(d, std::abs(box.center() - fz.z));
        if (!(d <= park_slack)) {
            throw NonIsolatedZeros(
                "zero set not resolved into isolated points near " +
                complex_str(box.center()));
        }
    }

    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });

    ZeroReport report;
    report.search_radius = R;
    report.bound = bound_override > 0 ? bound_override
                                      : static_cast<long>(n) * n;

    long index_total = 0;
    for (std::size_t i = 0; i < found.size(); ++i) {
        double dmin = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < found.size(); ++j) {
            if (j == i) continue;
            dmin = std::min(dmin, std::abs(found[i].z - found[j].z));
        }
        double r = std::max(std::min(0.35 * dmin, 0.05 * (1.0 + start)),
                            32.0 * tol);
        r = std::min(r, 0.45 * dmin);

        // A grazing contour is escaped by dilation; the cap above keeps
        // even the fully inflated circle away from the nearest neighbor.
        std::optional<long> index;
        for (int attempt = 0; attempt <= 8; ++attempt) {
            try {
                const Complex at = found[i].z;
                const double rr = r;
                index = winding_of(
                    [&f, at, rr](double t) {
                        return f.eval(at + std::polar(rr, kTwoPi * t));
                    },
                    32);
                break;
            } catch (const NearZeroOnContour&) {
                r *= 1.0 + 1.0 / 64.0;
            }
        }
        if (!index) {
            throw NonIsolatedZeros("no index-stable circle around " +
                                   complex_str(found[i].z));
        }
        index_total += *index;
        if (*index == 0) continue;  // fold point, not a zero of odd structure

        Zero zero;
        zero.location = found[i].z;
        zero.index = *index;
        zero.orientation = classify_orientation(f, found[i].z);
        zero.residual = std::abs(f.eval(found[i].z));
        report.zeros.push_back(zero);
    }

    // Every zero lies inside |z| < R and the leading term dominates on the
    // outer circle, so the local indices must account for the full degree.
    if (index_total != n) {
        throw NonIsolatedZeros(
            "local indices sum to " + std::to_string(index_total) +
            " but the outer winding is " + std::to_string(n) +
            "; zeros are unresolved at this tolerance");
    }

    report.distinct_count = static_cast<int>(report.zeros.size());
    report.count_with_multiplicity = 0;
    report.index_sum = 0;
    for (const Zero& z : report.zeros) {
        report.count_with_multiplicity += std::labs(z.index);
        report.index_sum += z.index;
    }
    report.within_bound = report.count_with_multiplicity <= report.bound;
    return report;
}

ProductZeros product_zeros(const HarmonicFn& f, Alpha a, double tol) {
    require_dominant_degrees(f);
    const long n = effective_degree(f.h);

    ProductZeros result;
    result.f_report = find_zeros(f, tol);
    result.F_report = find_zeros(cofactor(f, a), tol);
    result.product_report =
        find_zeros(harmonic_product(f, a), tol, 2 * n * n);

    const double match = 10.0 * tol;
    result.union_ok = true;
    result.multiplicities_add = true;
    result.max_match_distance = 0.0;

    std::vector<const Zero*> factor_zeros;
    for (const Zero& z : result.f_report.zeros) factor_zeros.push_back(&z);
    for (const Zero& z : result.F_report.zeros) factor_zeros.push_back(&z);

    for (const Zero& pz : result.product_report.zeros) {
        double dmin = std::numeric_limits<double>::infinity();
        long expected = 0;
        for (const Zero* fz : factor_zeros) {
            const double d = std::abs(pz.location - fz->location);
            dmin = std::min(dmin, d);
            if (d <= match) expected += fz->index;
        }
        if (dmin > match) {
            result.union_ok = false;
        } else {
            result.max_match_distance =
                std::max(result.max_match_distance, dmin);
        }
        if (pz.index != expected) result.multiplicities_add = false;
    }
    for (const Zero* fz : factor_zeros) {
        double dmin = std::numeric_limits<double>::infinity();
        for (const Zero& pz : result.product_report.zeros) {
            dmin = std::min(dmin, std::abs(pz.location - fz->location));
        }
        if (dmin > match) {
            result.union_ok = false;
        } else {
            result.max_match_distance =
                std::max(result.max_match_distance, dmin);
        }
    }
    return result;
}

bool check_bound(const ZeroReport& report) {
    return report.count_with_multiplicity <= report.bound;
}

}  // namespace hpk
