#include "ratmoduli/ratmap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ratmoduli {

namespace {

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace

void validate_canonical(const RationalMap& r, const Tolerances& tol) {
    const int d = std::max(r.num.degree(), r.den.degree());
    if (d < 2) throw InvalidInputError("degree: rational map must have degree >= 2");
    if (r.den.degree() != d)
        throw InvalidInputError("degree: denominator degree must equal the map degree");
    if (std::abs(r.den.leading() - Complex(1.0)) > tol.zero_test)
        throw InvalidInputError("monic: denominator must be monic");
    if (resultant_relative(r.num, r.den) <= tol.zero_test)
        throw InvalidInputError("resultant: numerator and denominator share a root");
}

CanonicalizeResult canonicalize(const Poly& num_raw, const Poly& den_raw, const Tolerances& tol) {
    tol.validate();
    if (num_raw.is_zero() || den_raw.is_zero())
        throw InvalidInputError("resultant: zero numerator or denominator");
    const int d = std::max(num_raw.degree(), den_raw.degree());
    if (d < 2) throw InvalidInputError("degree: rational map must have degree >= 2");
    if (num_raw.degree() > 0 || den_raw.degree() > 0) {
        if (resultant_relative(num_raw, den_raw) <= tol.zero_test)
            throw InvalidInputError("resultant: numerator and denominator share a root");
    }

    if (den_raw.degree() == d) {
        const Complex lead = den_raw.leading();
        RationalMap map{Complex(1.0) / lead * num_raw, Complex(1.0) / lead * den_raw};
        validate_canonical(map, tol);
        return {map, MoebiusTransform::identity()};
    }

    // The map fixes infinity.  Conjugate by t(z) = (g z + 1)/z, which moves
    // infinity to g; any g that is neither fixed nor a pole restores full
    // denominator degree.
    const double scale = std::max({num_raw.max_abs_coeff(), den_raw.max_abs_coeff(), 1.0});
    for (int k = 0;; ++k) {
        const double g_real = (k % 2 == 0) ? (k / 2) : -((k + 1) / 2);
        const Complex g(g_real);
        if (k > 64)
            throw NumericalError("canonicalize: no suitable finite conjugation point found");
        const Complex den_at = den_raw(g);
        if (std::abs(den_at) <= tol.zero_at(scale)) continue; // pole
        const Complex fixed_residual = num_raw(g) - g * den_at;
        if (std::abs(fixed_residual) <= tol.zero_at(scale * (1.0 + std::abs(g)))) continue;
        const MoebiusTransform t =
            MoebiusTransform::make(g, Complex(1.0), Complex(1.0), Complex(0.0), tol);
        return {conjugate_map(RationalMap{num_raw, den_raw}, t, tol), t};
    }
}

Poly fixed_point_polynomial(const RationalMap& r) {
    return Poly::identity() * r.den - r.num;
}

int FixedPointSet::total_multiplicity() const {
    int sum = 0;
    for (const FixedPoint& p : points) sum += p.multiplicity;
    return sum;
}

Complex multiplier_at(const RationalMap& r, Complex z) {
    const Complex q = r.den(z);
    return (r.num.derivative()(z) * q - r.num(z) * r.den.derivative()(z)) / (q * q);
}

FixedPointSet fixed_points(const RationalMap& r, const Tolerances& tol) {
    const Poly phat = fixed_point_polynomial(r);
    FixedPointSet set;
    for (const RootCluster& c : roots_with_multiplicities(phat, tol)) {
        FixedPoint fp;
        fp.location = c.value;
        fp.multiplicity = c.multiplicity;
        fp.multiplier = multiplier_at(r, c.value);
        if (c.multiplicity == 1) fp.index = Complex(1.0) / (Complex(1.0) - fp.multiplier);
        set.points.push_back(fp);
    }
    std::sort(set.points.begin(), set.points.end(),
              [](const FixedPoint& a, const FixedPoint& b) {
                  return lex_less(a.location, b.location);
              });
    return set;
}

Complex fatou_sum(const RationalMap& r, const Tolerances& tol) {
    const FixedPointSet set = fixed_points(r, tol);
    Complex sum(0.0);
    for (const FixedPoint& p : set.points) {
        if (!p.index)
            throw InvalidInputError(
                "fatou_sum requires all fixed points simple (a multiple fixed point is present)");
        sum += *p.index;
    }
    return sum;
}

bool is_normalized(const RationalMap& r, const Tolerances& tol) {
    const double scale =
        std::max({r.num.max_abs_coeff(), r.den.max_abs_coeff(), 1.0});
    const double eps = tol.zero_at(scale);
    return std::abs(r.num.coeff(0)) <= eps && std::abs(r.den.coeff(1) + Complex(1.0)) <= eps &&
           std::abs(r.den.coeff(0) - Complex(1.0)) <= eps;
}

} // namespace ratmoduli
