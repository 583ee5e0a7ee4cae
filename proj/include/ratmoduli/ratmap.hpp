#pragma once

#include <optional>
#include <vector>

#include "ratmoduli/cpoly.hpp"
#include "ratmoduli/moebius.hpp"

namespace ratmoduli {

// A rational map R = num/den in canonical form: den monic of degree equal to
// the map degree d = max(deg num, deg den) >= 2, and resultant(num, den) != 0.
// Build through canonicalize() or validate with validate_canonical().
struct RationalMap {
    Poly num;
    Poly den;

    int degree() const { return den.degree(); }
    // R(z); den(z) is never zero at points we evaluate in practice, but a pole
    // yields inf/nan just as plain division would.
    Complex operator()(Complex z) const { return num(z) / den(z); }
};

// Throws InvalidInputError naming the violated property (degree, monic, resultant).
void validate_canonical(const RationalMap& r, const Tolerances& tol = {});

struct CanonicalizeResult {
    RationalMap map;
    MoebiusTransform conjugator; // map = conjugate_map(input, conjugator)
};

// Brings an arbitrary fraction num/den of degree d = max(deg num, deg den) >= 2
// into canonical form.  If deg den < d the map fixes infinity; it is conjugated
// by t(z) = (g z + 1)/z for the first g in 0, 1, -1, 2, -2, ... that is neither
// a fixed point nor a pole, which moves infinity to the finite point g.
// Throws InvalidInputError when the degree is < 2 or num and den share a root.
CanonicalizeResult canonicalize(const Poly& num, const Poly& den, const Tolerances& tol = {});

// t^{-1} o R o t by formal substitution, re-canonicalized (monic denominator).
// Throws DegenerateConjugationError when t(inf) is a fixed point of R, which
// would drop the denominator degree below deg(R).
RationalMap conjugate_map(const RationalMap& r, const MoebiusTransform& t,
                          const Tolerances& tol = {});

// z * den(z) - num(z): monic of degree d+1; its roots are the fixed points.
Poly fixed_point_polynomial(const RationalMap& r);

struct FixedPoint {
    Complex location;
    int multiplicity = 1;
    Complex multiplier;            // R'(location), reported as computed
    std::optional<Complex> index;  // 1/(1 - multiplier); empty when multiplicity >= 2
};

// Fixed points sorted lexicographically by (re, im) of the location.
struct FixedPointSet {
    std::vector<FixedPoint> points;

    int total_multiplicity() const;
};

FixedPointSet fixed_points(const RationalMap& r, const Tolerances& tol = {});

// Sum of the fixed point indices 1/(1 - m_j); equals 1 for any canonical map
// with all fixed points simple.  Throws InvalidInputError when a multiple
// fixed point is present.
Complex fatou_sum(const RationalMap& r, const Tolerances& tol = {});

// True when the map lies in the normalized family: num has zero constant term
// and the denominator ends ... - z + 1 (coefficient of z is -1, constant 1).
bool is_normalized(const RationalMap& r, const Tolerances& tol = {});

// R'(z) at a finite non-pole point.
Complex multiplier_at(const RationalMap& r, Complex z);

} // namespace ratmoduli
