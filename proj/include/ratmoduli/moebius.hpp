#pragma once

#include "ratmoduli/cpoly.hpp"

namespace ratmoduli {

// A point on the Riemann sphere: an ordinary complex number or infinity.
struct SpherePoint {
    Complex value{0.0};
    bool infinite = false;

    static SpherePoint at(Complex z) { return {z, false}; }
    static SpherePoint infinity() { return {Complex(0.0), true}; }
};

// z -> (a z + b) / (c z + d), stored normalized so the entry of largest
// modulus is exactly 1.  Build through make() to get the invertibility check.
struct MoebiusTransform {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static MoebiusTransform identity() { return {}; }
    static MoebiusTransform translation(Complex offset);
    // Validates |ad - bc| against zero_test after normalization.
    static MoebiusTransform make(Complex a, Complex b, Complex c, Complex d,
                                 const Tolerances& tol = {});

    MoebiusTransform normalized() const;
    Complex determinant() const { return a * d - b * c; }
};

SpherePoint apply(const MoebiusTransform& t, SpherePoint z);

// compose(s, t) acts as z -> s(t(z)).
MoebiusTransform compose(const MoebiusTransform& s, const MoebiusTransform& t);

MoebiusTransform inverse(const MoebiusTransform& t);

} // namespace ratmoduli
