#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hpk/errors.hpp"
#include "hpk/product.hpp"
#include "test_util.hpp"

using namespace hpk;
using test::fn;
using test::poly;

namespace {

const Complex kI{0.0, 1.0};

bool same_fn(const HarmonicFn& a, const HarmonicFn& b, double tol = 0.0) {
    return max_coeff_dist(a.h, b.h) <= tol && max_coeff_dist(a.g, b.g) <= tol;
}

}  // namespace

TEST_CASE("alpha admits exactly the finite nonzero reals") {
    CHECK(Alpha(2.0).value() == 2.0);
    CHECK(Alpha(-0.5).value() == -0.5);
    CHECK_THROWS_AS(Alpha(0.0), InvalidAlpha);
    CHECK_THROWS_AS(Alpha(std::numeric_limits<double>::quiet_NaN()),
                    InvalidAlpha);
    CHECK_THROWS_AS(Alpha(std::numeric_limits<double>::infinity()),
                    InvalidAlpha);
}

TEST_CASE("cofactor scales h by alpha and g by minus alpha") {
    CHECK(same_fn(cofactor(fn({0.0, 1.0}, {0.0, 0.0, 1.0}), Alpha(2.0)),
                  fn({0.0, 2.0}, {0.0, 0.0, -2.0})));
    CHECK(same_fn(cofactor(fn({0.0, 0.0, 1.0}, {0.0, 1.0}), Alpha(1.0)),
                  fn({0.0, 0.0, 1.0}, {0.0, -1.0})));
    CHECK(same_fn(cofactor(fn({0.0, 1.0}, {}), Alpha(-1.0)),
                  fn({0.0, -1.0}, {})));

    CHECK_THROWS_AS(cofactor(fn({5.0}, {3.0}), Alpha(1.0)), ConstantInput);
}

TEST_CASE("harmonic product closed form alpha(h^2) - alpha conj(g^2)") {
    CHECK(same_fn(harmonic_product(fn({0.0, 0.0, 1.0}, {0.0, 1.0}), Alpha(1.0)),
                  fn({0.0, 0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, -1.0})));
    CHECK(same_fn(harmonic_product(fn({0.0, 1.0}, {0.0, 0.0, 1.0}), Alpha(2.0)),
                  fn({0.0, 0.0, 2.0}, {0.0, 0.0, 0.0, 0.0, -2.0})));
    CHECK(same_fn(harmonic_product(fn({0.0, 1.0}, {}), Alpha(1.0)),
                  fn({0.0, 0.0, 1.0}, {})));

    CHECK_THROWS_AS(harmonic_product(fn({2.0}, {}), Alpha(3.0)), ConstantInput);
}

TEST_CASE("closed form matches the mixed-algebra product coefficientwise") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> ua(0.25, 2.0);
    for (int trial = 0; trial < 60; ++trial) {
        const HarmonicFn f = test::random_fn(rng, 1 + trial % 6, trial % 7);
        const Alpha alpha(trial % 2 == 0 ? ua(rng) : -ua(rng));

        const MixedPoly direct = embed(f) * embed(cofactor(f, alpha));
        const MixedPoly closed = embed(harmonic_product(f, alpha));
        const double scale = 1.0 + direct.max_abs();
        CHECK((direct - closed).max_abs() <= 1e-12 * scale);
    }
}

TEST_CASE("product with the cofactor is harmonic with constant k") {
    const HarmonicFn f = fn({0.0, 1.0}, {0.0, 0.0, 1.0});
    const ProductVerdict v = product_is_harmonic(f, cofactor(f, Alpha(1.0)));
    CHECK(v.harmonic);
    CHECK(v.k_constant);
    CHECK(v.mixed_residual <= 1e-12);
    // k = -h conj(g) + h conj(g) cancels to round-off here.
    CHECK(v.k_poly.max_abs() <= 1e-15);
}

TEST_CASE("product of a nonconstant function with itself is not harmonic") {
    const HarmonicFn f = fn({0.0, 1.0}, {0.0, 1.0});  // f = z + zbar
    const ProductVerdict v = product_is_harmonic(f, f);
    CHECK(!v.harmonic);
    CHECK(!v.k_constant);
    CHECK(v.mixed_residual == doctest::Approx(1.0));
    // k = 2 z zbar.
    CHECK(v.k_poly.coeff(1, 1) == Complex{2.0, 0.0});
}

TEST_CASE("a complex unit scale breaks harmonicity of the product") {
    // f = z + zbar^2 with the cofactor formula applied at alpha = i.
    const HarmonicFn f = fn({0.0, 1.0}, {0.0, 0.0, 1.0});
    const HarmonicFn F{f.h.scaled(kI), f.g.scaled(-kI)};
    const ProductVerdict v = product_is_harmonic(f, F);
    CHECK(!v.harmonic);
    CHECK(v.mixed_residual >= 0.1);
    CHECK(!v.k_constant);
}

TEST_CASE("cofactor soundness across a random corpus") {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> ua(0.25, 2.0);
    std::uniform_int_distribution<int> dh(1, 6);
    std::uniform_int_distribution<int> dg(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const HarmonicFn f = test::random_fn(rng, dh(rng), dg(rng));
        const Alpha alpha(trial % 2 == 0 ? ua(rng) : -ua(rng));
        const ProductVerdict v = product_is_harmonic(f, cofactor(f, alpha));
        CHECK(v.harmonic);
        CHECK(v.k_constant);
        CHECK(v.mixed_residual <= 1e-12);
    }
}

TEST_CASE("dilatation negation on hand-picked pairs") {
    const HarmonicFn f = fn({0.0, 0.0, 1.0}, {0.0, 1.0});
    CHECK(dilatation_negation_check(f, cofactor(f, Alpha(3.0))));
    CHECK(!dilatation_negation_check(f, f));

    // Both dilatations vanish identically, so they negate each other.
    CHECK(dilatation_negation_check(fn({0.0, 1.0}, {}), fn({0.0, 5.0}, {})));
}

TEST_CASE("negation check does not depend on the cofactor scale") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const HarmonicFn f = test::random_fn(rng, 1 + trial % 5, trial % 5);
        for (double a : {1.0, -2.0, 0.5}) {
            CHECK(dilatation_negation_check(f, cofactor(f, Alpha(a))));
        }
    }
}

TEST_CASE("square harmonicity on hand-picked functions") {
    const SquareVerdict analytic = square_is_harmonic(fn({0.0, 0.0, 1.0}, {}));
    CHECK(analytic.harmonic);
    CHECK(analytic.degree_criterion);
    CHECK(analytic.witness.is_zero());

    const SquareVerdict folded = square_is_harmonic(fn({0.0, 1.0}, {0.0, 1.0}));
    CHECK(!folded.harmonic);
    CHECK(!folded.degree_criterion);
    // The obstruction 2 h' conj(g') is the constant 2 here.
    CHECK(folded.witness.deg_z() == 0);
    CHECK(folded.witness.deg_zbar() == 0);
    CHECK(folded.witness.coeff(0, 0) == Complex{2.0, 0.0});

    const SquareVerdict anti = square_is_harmonic(fn({7.0}, {0.0, 0.0, 0.0, 1.0}));
    CHECK(anti.harmonic);
    CHECK(anti.degree_criterion);
}

TEST_CASE("square is harmonic exactly when one part is constant") {
    std::mt19937_64 rng(67);
    for (int deg_h = 0; deg_h <= 5; ++deg_h) {
        for (int deg_g = 0; deg_g <= 5; ++deg_g) {
            const HarmonicFn f = test::random_fn(rng, deg_h, deg_g);
            const SquareVerdict v = square_is_harmonic(f);
            const bool expected = deg_h == 0 || deg_g == 0;
            CHECK(v.harmonic == expected);
            CHECK(v.degree_criterion == expected);
            CHECK(v.harmonic == (v.mixed_residual <= kIdentityTol));
        }
    }
}
