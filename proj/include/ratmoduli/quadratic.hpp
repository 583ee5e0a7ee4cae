#pragma once

#include <array>

#include "ratmoduli/ratmap.hpp"

namespace ratmoduli {

// The three fixed point multipliers of a degree-2 map, as an unordered multiset.
struct SpectrumD2 {
    Complex m1, m2, m3;

    // Entries sorted lexicographically by (re, im).
    std::array<Complex, 3> sorted() const;
};

// Elementary symmetric functions of the multipliers.
struct SigmaD2 {
    Complex s1, s2, s3;
};

// Multiplier symmetric functions of the normalized degree-2 map with numerator
// a2 z^2 + a1 z (denominator z^2 - z + 1), as explicit rational expressions in
// (a2, a1).  Throws InvalidInputError when the common denominator
// a2^2 + a1 a2 + a1^2 vanishes (those pairs are not valid maps).
SigmaD2 sigma_from_normalized(Complex a2, Complex a1, const Tolerances& tol = {});

// True when the multiset can be the multiplier spectrum of a degree-2 map:
// either at least two entries equal 1 (a multiple fixed point), or no entry
// equals 1 and the indices 1/(1 - m_j) sum to 1 within 1e-8.
bool fatou_valid(const SpectrumD2& s, const Tolerances& tol = {});

// A normalized degree-2 map whose multiplier spectrum is the given multiset:
// {1,1,1} and {0,0,2} map to fixed representatives, {1,1,m} to
// z(mz+p)/(p(z^2-z+1)) with p^2 + (m+1)p + m^2 = 0, and the general case
// solves a quadratic for the conjugation parameter.  Throws InvalidInputError
// when the spectrum is not fatou_valid, NumericalError when no admissible
// construction exists.
RationalMap spectrum_to_normalized(const SpectrumD2& s, const Tolerances& tol = {});

} // namespace ratmoduli
