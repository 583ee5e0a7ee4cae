#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "ratmoduli/ratmap.hpp"

namespace testutil {

using ratmoduli::Complex;

inline bool close(Complex a, Complex b, double eps = 1e-9) { return std::abs(a - b) <= eps; }

inline bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

inline std::vector<Complex> sorted_lex(std::vector<Complex> v) {
    std::sort(v.begin(), v.end(), lex_less);
    return v;
}

// Multipliers of all fixed points, repeated with multiplicity, sorted.
inline std::vector<Complex> multiplier_multiset(const ratmoduli::RationalMap& r,
                                                const ratmoduli::Tolerances& tol = {}) {
    std::vector<Complex> out;
    for (const auto& fp : ratmoduli::fixed_points(r, tol).points)
        for (int k = 0; k < fp.multiplicity; ++k) out.push_back(fp.multiplier);
    return sorted_lex(std::move(out));
}

inline double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return 1e300;
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

inline double coeff_distance(const ratmoduli::Poly& a, const ratmoduli::Poly& b) {
    const int n = std::max(a.degree(), b.degree());
    double worst = 0.0;
    for (int k = 0; k <= n; ++k) worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
    return worst;
}

inline double map_distance(const ratmoduli::RationalMap& a, const ratmoduli::RationalMap& b) {
    return std::max(coeff_distance(a.num, b.num), coeff_distance(a.den, b.den));
}

} // namespace testutil
