#include "ratmoduli/strata.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ratmoduli {

int OverlapType::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

OverlapType overlap_type(const RationalMap& r, const Tolerances& tol) {
    OverlapType type;
    for (const RootCluster& c : roots_with_multiplicities(fixed_point_polynomial(r), tol))
        type.parts.push_back(c.multiplicity);
    std::sort(type.parts.rbegin(), type.parts.rend());
    return type;
}

DecompositionParams decompose(const RationalMap& r, const Tolerances& tol) {
    validate_canonical(r, tol);
    const std::vector<RootCluster> clusters =
        roots_with_multiplicities(fixed_point_polynomial(r), tol);

    DecompositionParams out;
    for (std::size_t k = 0; k < clusters.size(); ++k) {
        const Complex zeta = clusters[k].value;
        const int n = clusters[k].multiplicity;

        // Taylor coefficients at zeta of den / prod_{j != k} (z - zeta_j)^{n_j},
        // by series division.  The cofactor is built directly in the shifted
        // variable: its roots there are zeta_j - zeta.
        std::vector<Complex> cofactor_roots;
        for (std::size_t j = 0; j < clusters.size(); ++j) {
            if (j == k) continue;
            for (int m = 0; m < clusters[j].multiplicity; ++m)
                cofactor_roots.push_back(clusters[j].value - zeta);
        }
        const Poly numer = r.den.shifted(zeta);
        const Poly denom = Poly::from_roots(cofactor_roots);

        std::vector<Complex> series(static_cast<std::size_t>(n));
        const Complex lead = denom.coeff(0); // nonzero: the zetas are separated
        for (int i = 0; i < n; ++i) {
            Complex acc = numer.coeff(i);
            for (int j = 1; j <= i; ++j)
                acc -= denom.coeff(j) * series[static_cast<std::size_t>(i - j)];
            series[static_cast<std::size_t>(i)] = acc / lead;
        }

        DecompositionPoint point;
        point.zeta = zeta;
        point.multiplicity = n;
        point.alphas.resize(static_cast<std::size_t>(n));
        // series[i] multiplies (z-zeta)^i and corresponds to the coefficient of
        // 1/(z-zeta)^(n-i).
        for (int i = 0; i < n; ++i)
            point.alphas[static_cast<std::size_t>(n - 1 - i)] = series[static_cast<std::size_t>(i)];
        out.points.push_back(std::move(point));
    }
    return out;
}

RationalMap recompose(const DecompositionParams& params, const Tolerances& tol) {
    if (params.points.empty()) throw InvalidInputError("recompose: no fixed points given");

    int total = 0;
    Complex alpha_sum(0.0);
    for (const DecompositionPoint& pt : params.points) {
        if (pt.multiplicity < 1)
            throw InvalidInputError("recompose: multiplicities must be positive");
        if (static_cast<int>(pt.alphas.size()) != pt.multiplicity)
            throw InvalidInputError("recompose: need exactly one alpha per multiplicity order");
        total += pt.multiplicity;
        alpha_sum += pt.alphas.front();
        double own_scale = 0.0;
        for (const Complex& a : pt.alphas) own_scale = std::max(own_scale, std::abs(a));
        if (std::abs(pt.alphas.back()) <= tol.zero_at(own_scale))
            throw InvalidInputError("recompose: top expansion coefficient must be nonzero");
    }
    const int d = total - 1;
    if (d < 2) throw InvalidInputError("recompose: multiplicities must sum to at least 3");
    if (std::abs(alpha_sum - Complex(1.0)) > 1e-8)
        throw InvalidInputError("recompose: first-order coefficients must sum to 1");
    for (std::size_t i = 0; i < params.points.size(); ++i)
        for (std::size_t j = i + 1; j < params.points.size(); ++j) {
            const double pair_scale = std::max(std::abs(params.points[i].zeta),
                                               std::abs(params.points[j].zeta));
            if (std::abs(params.points[i].zeta - params.points[j].zeta) <=
                tol.zero_at(pair_scale))
                throw InvalidInputError("recompose: fixed points must be distinct");
        }

    Poly den;
    std::vector<Complex> all_roots;
    for (const DecompositionPoint& pt : params.points)
        for (int m = 0; m < pt.multiplicity; ++m) all_roots.push_back(pt.zeta);

    for (const DecompositionPoint& pt : params.points) {
        std::vector<Complex> cofactor_roots;
        for (const DecompositionPoint& other : params.points) {
            if (&other == &pt) continue;
            for (int m = 0; m < other.multiplicity; ++m) cofactor_roots.push_back(other.zeta);
        }
        const Poly cofactor = Poly::from_roots(cofactor_roots);
        Poly inner;
        Poly power = Poly::constant(Complex(1.0));
        const Poly linear{-pt.zeta, Complex(1.0)};
        for (int i = 0; i < pt.multiplicity; ++i) {
            inner = inner + pt.alphas[static_cast<std::size_t>(pt.multiplicity - 1 - i)] * power;
            power = power * linear;
        }
        den = den + inner * cofactor;
    }

    // den's leading coefficient is the alpha sum, 1 only up to roundoff (or up
    // to the 1e-8 gate above).  Rescale to an exactly monic denominator so the
    // degree d+1 terms of z*den and phat cancel exactly.
    std::vector<Complex> dc = den.coeffs();
    const Complex lead = dc.back();
    for (Complex& c : dc) c = c / lead;
    dc.back() = Complex(1.0);
    const Poly den_monic{std::move(dc)};

    const Poly phat = Poly::from_roots(all_roots);
    const Poly num = Poly::identity() * den_monic - phat;
    RationalMap map{num, den_monic};
    validate_canonical(map, tol);
    return map;
}

StratumDims stratum_dims(const OverlapType& type, int degree) {
    if (degree < 2) throw InvalidInputError("stratum_dims: degree must be >= 2");
    if (type.total() != degree + 1)
        throw InvalidInputError("stratum_dims: multiplicities must sum to degree + 1");
    for (int part : type.parts)
        if (part < 1) throw InvalidInputError("stratum_dims: multiplicities must be positive");
    const int p = type.part_count();
    return {degree + p, degree + 1 - p};
}

namespace {

struct TermSum {
    Complex value{0.0};
    double scale = 0.0;

    void add(Complex term) {
        value += term;
        scale += std::abs(term);
    }
};

TermSum locus_terms(const RationalMap& r) {
    const int d = r.degree();
    TermSum sum;
    if (d == 2) {
        const Complex a2 = r.num.coeff(2), a1 = r.num.coeff(1), a0 = r.num.coeff(0);
        const Complex b1 = r.den.coeff(1), b0 = r.den.coeff(0);
        const Complex s = b1 - a2; // z^2 coefficient of the fixed point polynomial
        const Complex t = b0 - a1; // z coefficient
        sum.add(-27.0 * a0 * a0);
        sum.add(4.0 * a0 * s * s * s);
        sum.add(-18.0 * a0 * t * s);
        sum.add((a1 - b0) * (a1 - b0) * s * s);
        sum.add(4.0 * (a1 - b0) * (a1 - b0) * (a1 - b0));
        return sum;
    }
    if (d == 3) {
        const Complex a3 = r.num.coeff(3), a2 = r.num.coeff(2), a1 = r.num.coeff(1),
                      a0 = r.num.coeff(0);
        const Complex b2 = r.den.coeff(2), b1 = r.den.coeff(1), b0 = r.den.coeff(0);
        const Complex u = b2 - a3, v = b1 - a2, w = b0 - a1;
        sum.add(256.0 * a0 * a0 * a0);
        sum.add(a0 * a0 * 128.0 * v * v);
        sum.add(a0 * a0 * -144.0 * u * u * v);
        sum.add(a0 * a0 * 27.0 * u * u * u * u);
        sum.add(a0 * a0 * 192.0 * u * w);
        sum.add(a0 * 16.0 * v * v * v * v);
        sum.add(a0 * -4.0 * u * u * v * v * v);
        sum.add(a0 * -80.0 * w * u * v * v);
        sum.add(a0 * 18.0 * w * u * u * u * v);
        sum.add(a0 * 144.0 * w * w * v);
        sum.add(a0 * -6.0 * w * w * u * u);
        sum.add(w * w * 4.0 * v * v * v);
        sum.add(w * w * -1.0 * u * u * v * v);
        sum.add(w * w * -18.0 * w * u * v);
        sum.add(w * w * w * 4.0 * u * u * u);
        sum.add(w * w * w * 27.0 * w);
        return sum;
    }
    // No published expansion at this degree; fall back to the fixed point
    // polynomial discriminant, scaled by the Sylvester matrix norm.
    const Poly phat = fixed_point_polynomial(r);
    sum.value = discriminant(phat);
    const double rel = resultant_relative(phat, phat.derivative());
    sum.scale = (rel > 0.0) ? std::abs(sum.value) / rel : std::abs(sum.value);
    if (sum.scale == 0.0) sum.scale = 1.0;
    return sum;
}

} // namespace

Complex locus_residual(const RationalMap& r) { return locus_terms(r).value; }

double locus_residual_relative(const RationalMap& r) {
    const TermSum sum = locus_terms(r);
    if (sum.scale == 0.0) return 0.0;
    return std::abs(sum.value) / sum.scale;
}

} // namespace ratmoduli
