#include "ratmoduli/analysis.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ratmoduli/errors.hpp"

namespace ratmoduli {

Analysis analyze(const MapDocument& doc, const Tolerances& tol, bool check_degree) {
    tol.validate();
    const int num_deg = doc.num.degree();
    const int den_deg = doc.den.degree();
    const int actual = std::max(num_deg, den_deg);
    if (check_degree && actual != doc.degree) {
        throw InvalidInputError("declared degree " + std::to_string(doc.degree) +
                                " does not match coefficient degree " + std::to_string(actual));
    }

    Analysis out;
    auto canon = canonicalize(doc.num, doc.den, tol);
    out.canonical = canon.map;

    out.fixed = fixed_points(out.canonical, tol);
    out.type = OverlapType{};
    for (const auto& fp : out.fixed.points) out.type.parts.push_back(fp.multiplicity);
    std::sort(out.type.parts.begin(), out.type.parts.end(), std::greater<int>());

    out.dims = stratum_dims(out.type, out.canonical.degree());
    out.decomposition = decompose(out.canonical, tol);
    out.trace = normalize(out.canonical, tol);
    out.total_conjugator = compose(canon.conjugator, out.trace.conjugator);

    if (out.canonical.degree() == 2) {
        const Poly& num = out.trace.result.num;
        out.sigma = sigma_from_normalized(num.coeff(2), num.coeff(1), tol);
    }

    out.locus_value = locus_residual(out.canonical);
    out.locus_relative = locus_residual_relative(out.canonical);
    return out;
}

} // namespace ratmoduli
