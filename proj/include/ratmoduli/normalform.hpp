#pragma once

#include "ratmoduli/ratmap.hpp"

namespace ratmoduli {

// Everything normalize() did to reach the normalized representative.
struct NormalizationTrace {
    RationalMap result;            // member of the normalized family
    MoebiusTransform conjugator;   // result = conjugate_map(input, conjugator)
    Complex chosen_fixed_point;    // the fixed point that was moved to the origin
    Complex p;                     // root of the scaling equation that was used
    Complex q;                     // q(p) in t(z) = z / (p z + q)
    int attempts = 1;              // how many fixed points were tried (1-based)
};

// Conjugates r by z -> z + zeta so the fixed point zeta lands at the origin.
// The constant numerator coefficient of the result is exactly zero.  Throws
// InvalidInputError when zeta is not a fixed point of r (within tolerance).
RationalMap translate_to_fixed_point(const RationalMap& r, Complex zeta,
                                     const Tolerances& tol = {});

// For a canonical map with a fixed point at the origin (zero constant numerator
// coefficient), the polynomial whose value at p is the leading denominator
// coefficient after conjugating by t(z) = z/(pz + q).  Equals the coefficient
// reversal of the fixed point polynomial: prod over nonzero fixed points of
// (1 - zeta_k p), counted with multiplicity.
Poly b_d_star_poly(const RationalMap& r, const Tolerances& tol = {});
Complex b_d_star(const RationalMap& r, Complex p, const Tolerances& tol = {});

// The scaling equation E(p) = b0 * q(p)^d - b_d_star(p) with
// q(p) = -((d*b0 - a1) p + b1) / b0.  Roots p* with q(p*) != 0 and
// b_d_star(p*) != 0 give conjugations t(z) = z/(p* z + q(p*)) landing in the
// normalized family.  Throws InvalidInputError when q is identically zero.
Poly p_equation(const RationalMap& r, const Tolerances& tol = {});

// Conjugates r into the normalized family: constant numerator coefficient 0,
// denominator ending ... - z + 1.  Fixed points are tried in order of
// decreasing multiplicity (ties: smaller |zeta|, then lexicographic); for each,
// roots of the scaling equation are tried in order of increasing |p|.  Throws
// NumericalError if every candidate fails.
NormalizationTrace normalize(const RationalMap& r, const Tolerances& tol = {});

// (w2^2 - w1 w2 + w1^2) w3^2 + (-w1 w2^2 - w1^2 w2) w3 + w1^2 w2^2.
// Vanishes exactly when 1/w1, 1/w2, 1/w3 form a regular triangle, the
// configuration for which the first scaling equation can degenerate.
Complex w_degeneracy(Complex w1, Complex w2, Complex w3);

} // namespace ratmoduli
