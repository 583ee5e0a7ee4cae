"""Computations in the moduli space of rational maps of degree >= 2.

Thin Python surface over the C++ core: canonical/normalized forms, fixed
points with multipliers and indices, overlap-type strata, decomposition
coordinates, and the degree-2 multiplier-spectrum coordinates.
"""

from ._core import (
    DecompositionPoint,
    DegenerateConjugationError,
    FixedPoint,
    InvalidInputError,
    MoebiusTransform,
    NormalizationTrace,
    NumericalError,
    RationalMap,
    SplitMix64,
    Tolerances,
    analyze_json,
    canonicalize,
    compose,
    conjugate,
    decompose,
    discriminant,
    fatou_sum,
    fatou_valid,
    fixed_points,
    is_normalized,
    locus_residual,
    locus_residual_relative,
    multiplier_at,
    normalize,
    overlap_type,
    random_canonical_map,
    recompose,
    resultant,
    roots_with_multiplicities,
    sigma_from_normalized,
    spectrum_to_normalized,
    stratum_dims,
)

__all__ = [
    "DecompositionPoint",
    "DegenerateConjugationError",
    "FixedPoint",
    "InvalidInputError",
    "MoebiusTransform",
    "NormalizationTrace",
    "NumericalError",
    "RationalMap",
    "SplitMix64",
    "Tolerances",
    "analyze_json",
    "canonicalize",
    "compose",
    "conjugate",
    "decompose",
    "discriminant",
    "fatou_sum",
    "fatou_valid",
    "fixed_points",
    "is_normalized",
    "locus_residual",
    "locus_residual_relative",
    "multiplier_at",
    "normalize",
    "overlap_type",
    "random_canonical_map",
    "recompose",
    "resultant",
    "roots_with_multiplicities",
    "sigma_from_normalized",
    "spectrum_to_normalized",
    "stratum_dims",
]

__version__ = "0.1.0"
