#pragma once

#include "hpk/mixed_poly.hpp"

namespace hpk {

// Validated cofactor scale: a finite nonzero real. Nonreal or zero scales
// break harmonicity of the product, so they are rejected at the type level.
class Alpha {
public:
    explicit Alpha(double value);
    double value() const { return value_; }

private:
    double value_;
};

struct SquareVerdict {
    bool harmonic;          // is f*f harmonic as a mixed polynomial
    double mixed_residual;  // harmonicity residual of embed(f)^2
    // d^2(f^2)/dz dzbar = 2 h'(z) conj(g'(z)); shows what obstructs
    // harmonicity when the verdict is negative.
    MixedPoly witness;
    // Structural criterion: h or g constant. Must agree with `harmonic`.
    bool degree_criterion;
};

// Squares f in the mixed algebra and checks harmonicity two ways: by the
// surviving mixed coefficients and by the criterion that one part of f is
// constant. The two agree for every polynomial input.
SquareVerdict square_is_harmonic(const HarmonicFn& f);

// The harmonic cofactor F = alpha*h - alpha*conj(g), i.e. (alpha h, -alpha g)
// as an (h, g) pair; f*F is then harmonic. Refuses constant f.
HarmonicFn cofactor(const HarmonicFn& f, Alpha alpha);

// The product f * cofactor(f, alpha) = alpha h^2 - alpha conj(g^2) in
// closed form: the pair (alpha h^2, -alpha g^2). Coefficient-identical to
// multiplying the embeddings. Refuses constant f.
HarmonicFn harmonic_product(const HarmonicFn& f, Alpha alpha);

struct ProductVerdict {
    bool harmonic;          // is f*F harmonic as a mixed polynomial
    double mixed_residual;  // harmonicity residual of embed(f)*embed(F)
    // k = h conj(G) + H conj(g) for f = h + conj(g), F = H + conj(G). The
    // product is harmonic exactly when k is; constancy of k is the stronger
    // certificate that the cofactor construction achieves.
    MixedPoly k_poly;
    bool k_constant;
};

// Checks harmonicity of the pointwise product of two harmonic functions,
// both via the product's own mixed coefficients and via constancy of k.
ProductVerdict product_is_harmonic(const HarmonicFn& f, const HarmonicFn& F);

// Dilatations of f and F are negatives of each other. Tested in
// cross-multiplied polynomial form, g' H' + G' h' = 0 identically, which
// avoids quotients. Requires h and H nonconstant.
bool dilatation_negation_check(const HarmonicFn& f, const HarmonicFn& F);

}  // namespace hpk
