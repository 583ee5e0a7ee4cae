#pragma once

#include <cstdint>

#include "ratmoduli/ratmap.hpp"

namespace ratmoduli {

// SplitMix64: the 64-bit state walks by the golden-ratio increment and each
// output is a finalizer hash of the state.  Deterministic across platforms, so
// generated fixtures are reproducible from the seed alone.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 significant bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform over the closed unit disk (radius via square root, angle uniform).
    Complex unit_disk();

private:
    std::uint64_t state_ = 0;
};

// A random canonical map of the given degree: numerator coefficients and the
// non-leading denominator coefficients drawn from the unit disk, denominator
// monic; draws whose numerator and denominator nearly share a root are
// rejected and retried.
RationalMap random_canonical_map(SplitMix64& rng, int degree, const Tolerances& tol = {});

} // namespace ratmoduli
