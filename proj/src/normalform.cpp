#include "ratmoduli/normalform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ratmoduli {

namespace {

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

void require_origin_fixed(const RationalMap& r, const Tolerances& tol, const char* who) {
    const double scale = std::max({r.num.max_abs_coeff(), r.den.max_abs_coeff(), 1.0});
    if (std::abs(r.num.coeff(0)) > tol.zero_at(scale)) {
        std::ostringstream os;
        os << who << " requires a fixed point at the origin (constant numerator coefficient)";
        throw InvalidInputError(os.str());
    }
}

} // namespace

RationalMap translate_to_fixed_point(const RationalMap& r, Complex zeta, const Tolerances& tol) {
    const Poly phat = fixed_point_polynomial(r);
    const double az = std::abs(zeta);
    double majorant = 0.0;
    for (std::size_t k = phat.coeffs().size(); k-- > 0;)
        majorant = majorant * az + std::abs(phat.coeff(static_cast<int>(k)));
    const double accept =
        std::max(64.0 * phat.eval_error_bound(zeta), tol.zero_test * std::max(1.0, majorant));
    if (std::abs(phat(zeta)) > accept)
        throw InvalidInputError("translate_to_fixed_point: given point is not a fixed point");

    RationalMap out = conjugate_map(r, MoebiusTransform::translation(zeta), tol);
    // The translated map fixes the origin by construction; zero out the
    // roundoff residue so downstream algebra sees an exact fixed point.
    std::vector<Complex> c = out.num.coeffs();
    if (!c.empty()) c[0] = Complex(0.0);
    out.num = Poly(std::move(c));
    return out;
}

Poly b_d_star_poly(const RationalMap& r, const Tolerances& tol) {
    require_origin_fixed(r, tol, "b_d_star");
    // Reversal of the fixed point polynomial; the origin root drops out as the
    // reversal discards the zero constant term.
    const Poly phat = fixed_point_polynomial(r);
    std::vector<Complex> coeffs = phat.coeffs(); // degree d+1, constant exactly 0 after translate
    std::vector<Complex> rev;
    rev.reserve(coeffs.size());
    for (std::size_t k = coeffs.size(); k-- > 1;) rev.push_back(coeffs[k]);
    return Poly(std::move(rev));
}

Complex b_d_star(const RationalMap& r, Complex p, const Tolerances& tol) {
    return b_d_star_poly(r, tol)(p);
}

Poly p_equation(const RationalMap& r, const Tolerances& tol) {
    require_origin_fixed(r, tol, "p_equation");
    const int d = r.degree();
    const Complex b0 = r.den.coeff(0);
    const Complex b1 = r.den.coeff(1);
    const Complex a1 = r.num.coeff(1);
    const Complex slope = static_cast<double>(d) * b0 - a1;
    const double scale = std::max({r.num.max_abs_coeff(), r.den.max_abs_coeff(), 1.0});
    if (std::abs(slope) <= tol.zero_at(scale) && std::abs(b1) <= tol.zero_at(scale))
        throw InvalidInputError("p_equation: q(p) is identically zero");

    const Poly q{-b1 / b0, -slope / b0};
    Poly qpow = Poly::constant(Complex(1.0));
    for (int k = 0; k < d; ++k) qpow = qpow * q;
    return b0 * qpow - b_d_star_poly(r, tol);
}

Complex w_degeneracy(Complex w1, Complex w2, Complex w3) {
    return (w2 * w2 - w1 * w2 + w1 * w1) * w3 * w3 + (-w1 * w2 * w2 - w1 * w1 * w2) * w3 +
           w1 * w1 * w2 * w2;
}

namespace {

// True when the map is close enough to the normalized family that re-running
// the scaling step on it converges (the correcting root is near zero).
bool near_normalized(const RationalMap& r) {
    const double scale = std::max({r.num.max_abs_coeff(), r.den.max_abs_coeff(), 1.0});
    const double slack = 1e-2 * scale;
    return std::abs(r.num.coeff(0)) <= slack && std::abs(r.den.coeff(1) + Complex(1.0)) <= slack &&
           std::abs(r.den.coeff(0) - Complex(1.0)) <= slack;
}

NormalizationTrace normalize_impl(const RationalMap& r, const Tolerances& tol, int depth);

} // namespace

NormalizationTrace normalize(const RationalMap& r, const Tolerances& tol) {
    tol.validate();
    validate_canonical(r, tol);
    return normalize_impl(r, tol, 0);
}

namespace {

NormalizationTrace normalize_impl(const RationalMap& r, const Tolerances& tol, int depth) {
    const int d = r.degree();

    std::vector<FixedPoint> candidates = fixed_points(r, tol).points;
    std::sort(candidates.begin(), candidates.end(), [](const FixedPoint& a, const FixedPoint& b) {
        if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
        const double ma = std::abs(a.location), mb = std::abs(b.location);
        if (ma != mb) return ma < mb;
        return lex_less(a.location, b.location);
    });

    std::ostringstream failures;
    int attempts = 0;
    for (const FixedPoint& candidate : candidates) {
        ++attempts;
        const Complex zeta = candidate.location;
        RationalMap shifted;
        try {
            shifted = translate_to_fixed_point(r, zeta, tol);
        } catch (const std::runtime_error& e) {
            failures << " [" << attempts << "] translate: " << e.what();
            continue;
        }

        const Complex b0 = shifted.den.coeff(0);
        const Complex b1 = shifted.den.coeff(1);
        const Complex a1 = shifted.num.coeff(1);
        const Complex slope = static_cast<double>(d) * b0 - a1;
        const double scale =
            std::max({shifted.num.max_abs_coeff(), shifted.den.max_abs_coeff(), 1.0});
        if (std::abs(slope) <= tol.zero_at(scale) && std::abs(b1) <= tol.zero_at(scale)) {
            failures << " [" << attempts << "] q identically zero";
            continue;
        }

        Poly equation;
        try {
            equation = p_equation(shifted, tol);
        } catch (const std::runtime_error& e) {
            failures << " [" << attempts << "] p_equation: " << e.what();
            continue;
        }
        equation = equation.trimmed(tol.zero_test);
        if (equation.degree() < 1) {
            failures << " [" << attempts << "] scaling equation degenerate (degree "
                     << equation.degree() << ")";
            continue;
        }

        std::vector<Complex> roots;
        try {
            for (const RootCluster& c : roots_with_multiplicities(equation, tol))
                roots.push_back(c.value);
        } catch (const NumericalError& e) {
            failures << " [" << attempts << "] scaling equation roots: " << e.what();
            continue;
        }
        std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
            const double ma = std::abs(a), mb = std::abs(b);
            if (ma != mb) return ma < mb;
            return lex_less(a, b);
        });

        const Poly star = b_d_star_poly(shifted, tol);
        for (Complex p : roots) {
            const Complex q = (-(slope * p) - b1) / b0;
            const double qscale = (std::abs(slope * p) + std::abs(b1)) / std::abs(b0);
            if (std::abs(q) <= tol.zero_at(qscale)) continue;
            if (std::abs(star(p)) <= tol.zero_at(star.max_abs_coeff())) continue;
            const MoebiusTransform t =
                MoebiusTransform::make(Complex(1.0), Complex(0.0), p, q, tol);
            RationalMap result;
            try {
                result = conjugate_map(shifted, t, tol);
            } catch (const std::runtime_error&) {
                continue;
            }
            NormalizationTrace trace;
            trace.conjugator = compose(MoebiusTransform::translation(zeta), t);
            trace.chosen_fixed_point = zeta;
            trace.p = p;
            trace.q = q;
            trace.attempts = attempts;
            if (!is_normalized(result, tol)) {
                // An ill-conditioned scaling equation can leave the landing
                // short of the family by more than the tolerance.  Re-running
                // the construction from inside the basin picks a tiny
                // correction root and converges.
                if (depth >= 3 || !near_normalized(result)) continue;
                NormalizationTrace polish;
                try {
                    polish = normalize_impl(result, tol, depth + 1);
                } catch (const std::runtime_error&) {
                    continue;
                }
                trace.result = polish.result;
                trace.conjugator = compose(trace.conjugator, polish.conjugator);
                return trace;
            }
            trace.result = result;
            return trace;
        }
        failures << " [" << attempts << "] no admissible scaling root among " << roots.size();
    }

    std::ostringstream os;
    os << "normalize: all " << attempts << " fixed point candidates failed:" << failures.str();
    throw NumericalError(os.str());
}

} // namespace

} // namespace ratmoduli
