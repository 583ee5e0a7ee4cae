#pragma once

#include <optional>

#include "ratmoduli/normalform.hpp"
#include "ratmoduli/quadratic.hpp"
#include "ratmoduli/strata.hpp"

namespace ratmoduli {

// A map as exchanged on the wire: raw coefficient lists plus the declared degree.
struct MapDocument {
    int degree = 0;
    Poly num;
    Poly den;
};

// Everything the analyze pipeline derives from one map.
struct Analysis {
    RationalMap canonical;                // canonicalized input
    NormalizationTrace trace;             // normalization of the canonical map
    MoebiusTransform total_conjugator;    // input -> normalized representative
    OverlapType type;
    StratumDims dims;
    FixedPointSet fixed;                  // fixed points of the canonical map
    DecompositionParams decomposition;
    std::optional<SigmaD2> sigma;         // degree 2 only
    Complex locus_value;
    double locus_relative = 0.0;
};

// Runs canonicalize, fixed points, overlap type, decomposition, normalization,
// stratum dimensions and the locus residual.  With check_degree set, a declared
// degree that disagrees with the coefficients is an InvalidInputError.
Analysis analyze(const MapDocument& doc, const Tolerances& tol = {}, bool check_degree = false);

} // namespace ratmoduli
