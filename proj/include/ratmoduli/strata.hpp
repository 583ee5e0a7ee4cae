#pragma once

#include <vector>

#include "ratmoduli/ratmap.hpp"

namespace ratmoduli {

// Multiset of fixed point multiplicities, parts sorted descending; a partition
// of d+1 for a degree-d map.
struct OverlapType {
    std::vector<int> parts;

    int part_count() const { return static_cast<int>(parts.size()); }
    int total() const;
    bool operator==(const OverlapType& other) const { return parts == other.parts; }
};

OverlapType overlap_type(const RationalMap& r, const Tolerances& tol = {});

// One fixed point zeta of multiplicity n with its expansion coefficients:
// alphas[l-1] is the coefficient of 1/(z - zeta)^l, l = 1..n, in the partial
// fraction expansion of den / fixed_point_polynomial.
struct DecompositionPoint {
    Complex zeta;
    int multiplicity = 1;
    std::vector<Complex> alphas;
};

// Complete coordinates for a map within its stratum: the fixed points with
// multiplicities plus the expansion coefficients.  The first-order coefficients
// alphas[0] sum to 1 and each top coefficient alphas[n-1] is nonzero.
struct DecompositionParams {
    std::vector<DecompositionPoint> points;
};

// Reads the parameters off a canonical map.  The coefficient of 1/(z-zeta)^(n-l)
// is the l-th Taylor coefficient at zeta of den(z) / prod_{j != k} (z-zeta_j)^{n_j}.
DecompositionParams decompose(const RationalMap& r, const Tolerances& tol = {});

// Rebuilds the canonical map with the given fixed point structure.  Validates
// sum of alphas[0] == 1 (within 1e-8), alphas[n-1] != 0, and distinct zetas;
// throws InvalidInputError otherwise.
RationalMap recompose(const DecompositionParams& params, const Tolerances& tol = {});

// Dimensions attached to an overlap type with p parts in degree d: the stratum
// closure has dimension d + p and the fibers of the forgetful projection have
// dimension d + 1 - p.  Throws InvalidInputError unless the parts sum to d+1.
struct StratumDims {
    int locus_dim = 0;
    int fiber_dim = 0;
};

StratumDims stratum_dims(const OverlapType& type, int degree);

// The published defining polynomial of the multiple-fixed-point locus,
// evaluated on the coefficients: for d=2 and d=3 the explicit discriminant
// expansions in the coefficient differences, for other degrees the
// discriminant of the fixed point polynomial.
Complex locus_residual(const RationalMap& r);

// |locus_residual| divided by the sum of the magnitudes of the monomials that
// produced it; a scale-free vanishing test.
double locus_residual_relative(const RationalMap& r);

} // namespace ratmoduli
