#include "ratmoduli/mapgen.hpp"

#include <cmath>
#include <numbers>

namespace ratmoduli {

Complex SplitMix64::unit_disk() {
    const double radius = std::sqrt(uniform());
    const double angle = 2.0 * std::numbers::pi * uniform();
    return Complex(radius * std::cos(angle), radius * std::sin(angle));
}

RationalMap random_canonical_map(SplitMix64& rng, int degree, const Tolerances& tol) {
    if (degree < 2) throw InvalidInputError("random_canonical_map: degree must be >= 2");
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Complex> num(static_cast<std::size_t>(degree) + 1);
        std::vector<Complex> den(static_cast<std::size_t>(degree) + 1);
        for (Complex& c : num) c = rng.unit_disk();
        for (std::size_t k = 0; k + 1 < den.size(); ++k) den[k] = rng.unit_disk();
        den.back() = Complex(1.0);
        RationalMap map{Poly(std::move(num)), Poly(std::move(den))};
        if (resultant_relative(map.num, map.den) <= tol.zero_test) continue;
        if (map.num.degree() < 1) continue; // keep maps honestly rational
        return map;
    }
    throw NumericalError("random_canonical_map: rejection sampling failed repeatedly");
}

} // namespace ratmoduli
