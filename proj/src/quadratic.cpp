#include "ratmoduli/quadratic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace ratmoduli {

namespace {

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

bool near(Complex a, Complex b, double eps) { return std::abs(a - b) <= eps; }

const Poly kStandardDen{Complex(1.0), Complex(-1.0), Complex(1.0)}; // z^2 - z + 1

RationalMap normalized_quadratic(Complex a2, Complex a1) {
    return RationalMap{Poly{Complex(0.0), a1, a2}, kStandardDen};
}

} // namespace

std::array<Complex, 3> SpectrumD2::sorted() const {
    std::array<Complex, 3> s{m1, m2, m3};
    std::sort(s.begin(), s.end(), lex_less);
    return s;
}

SigmaD2 sigma_from_normalized(Complex a2, Complex a1, const Tolerances& tol) {
    const Complex denom = a2 * a2 + a1 * a2 + a1 * a1;
    const double scale = std::norm(a2) + std::norm(a1);
    if (std::abs(denom) <= tol.zero_at(scale))
        throw InvalidInputError(
            "sigma_from_normalized: a2^2 + a1*a2 + a1^2 vanishes (not a valid map)");
    SigmaD2 sigma;
    sigma.s1 = (2.0 * a2 * a2 + a1 * a1 * a2 + a1 * a1 * a1 - 2.0 * a1 * a1 + 3.0 * a1) / denom;
    sigma.s2 = (-(a1 * a1 - 2.0 * a1) * a2 * a2 + (a1 - 2.0) * a2 - 2.0 * a1 * a1 * a1 +
                4.0 * a1 * a1 - 4.0 * a1 + 3.0) /
               denom;
    sigma.s3 = sigma.s1 - 2.0;
    return sigma;
}

bool fatou_valid(const SpectrumD2& s, const Tolerances& tol) {
    const std::array<Complex, 3> m{s.m1, s.m2, s.m3};
    int ones = 0;
    for (Complex v : m)
        if (near(v, Complex(1.0), tol.zero_at(1.0))) ++ones;
    if (ones >= 2) return true;
    if (ones == 1) return false; // a single multiplier 1 cannot occur
    Complex sum(0.0);
    for (Complex v : m) sum += Complex(1.0) / (Complex(1.0) - v);
    return std::abs(sum - Complex(1.0)) <= 1e-8;
}

RationalMap spectrum_to_normalized(const SpectrumD2& s, const Tolerances& tol) {
    tol.validate();
    if (!fatou_valid(s, tol))
        throw InvalidInputError("spectrum_to_normalized: multiplier multiset violates the "
                                "fixed point index relation");
    const std::array<Complex, 3> m = s.sorted();
    const double one_eps = tol.zero_at(1.0);

    int ones = 0;
    for (Complex v : m)
        if (near(v, Complex(1.0), one_eps)) ++ones;

    if (ones == 3) return normalized_quadratic(Complex(-1.0), Complex(1.0)); // (-z^2+z)/(z^2-z+1)

    if (ones == 2) {
        Complex other;
        for (Complex v : m)
            if (!near(v, Complex(1.0), one_eps)) other = v;
        // z(mz+p)/(p(z^2-z+1)) with p^2 + (m+1)p + m^2 = 0; prefer the root of
        // larger modulus so the division by p is as tame as possible.
        const Complex mm = other;
        const Complex disc = (mm + 1.0) * (mm + 1.0) - 4.0 * mm * mm;
        const Complex root = std::sqrt(disc);
        const Complex p1 = (-(mm + 1.0) + root) / 2.0;
        const Complex p2 = (-(mm + 1.0) - root) / 2.0;
        Complex p = (std::abs(p1) > std::abs(p2)) ? p1 : p2;
        if (std::abs(p1) == std::abs(p2)) p = lex_less(p1, p2) ? p1 : p2;
        if (std::abs(p) <= tol.zero_at(std::abs(mm)))
            throw NumericalError("spectrum_to_normalized: conjugation parameter vanished");
        return normalized_quadratic(mm / p, Complex(1.0));
    }

    // Exactly {0, 0, 2}: no ordered pair satisfies the generic admissibility
    // conditions; use the closed-form representative 3/2 z^2 / (z^2 - z + 1).
    {
        const std::array<Complex, 3> special{Complex(0.0), Complex(0.0), Complex(2.0)};
        bool is_special = true;
        for (int i = 0; i < 3; ++i)
            if (!near(m[static_cast<std::size_t>(i)], special[static_cast<std::size_t>(i)],
                      one_eps))
                is_special = false;
        if (is_special) return normalized_quadratic(Complex(1.5), Complex(0.0));
    }

    // General position: scan ordered pairs (m1, m2) until one meets the
    // admissibility conditions, then solve the conjugation parameter quadratic.
    const double margin = tol.zero_at(1.0);
    const Complex iroot3 = Complex(0.0, 1.0) / std::sqrt(Complex(3.0));
    std::array<std::array<int, 2>, 6> orders{{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
    for (const auto& ord : orders) {
        const Complex m1 = m[static_cast<std::size_t>(ord[0])];
        const Complex m2 = m[static_cast<std::size_t>(ord[1])];
        if (std::abs(m2) <= margin) continue;
        if (std::abs(m2 - iroot3) <= margin || std::abs(m2 + iroot3) <= margin) continue;
        if (std::abs(m1 * m2 - 1.0) <= margin) continue;
        if (std::abs(m1 + m2 - 2.0) <= margin) continue;

        // (-m1^2 + 3 m1 - 3) p^2 + (2 m2 m1 - 3 m2 - 1) p - m2^2 = 0
        const Complex qa = -m1 * m1 + 3.0 * m1 - 3.0;
        const Complex qb = 2.0 * m2 * m1 - 3.0 * m2 - 1.0;
        const Complex qc = -m2 * m2;
        std::vector<Complex> roots;
        if (std::abs(qa) <= margin * (std::abs(qb) + std::abs(qc))) {
            if (std::abs(qb) <= margin) continue;
            roots.push_back(-qc / qb);
        } else {
            const Complex sq = std::sqrt(qb * qb - 4.0 * qa * qc);
            roots.push_back((-qb + sq) / (2.0 * qa));
            roots.push_back((-qb - sq) / (2.0 * qa));
        }

        // Prefer the root keeping both displayed denominators, p and
        // (m1-1)p - m2 + 1, farthest from zero.
        Complex best_p;
        double best_score = -1.0;
        for (Complex p : roots) {
            const double score = std::min(std::abs(p), std::abs((m1 - 1.0) * p - m2 + 1.0));
            if (score > best_score ||
                (score == best_score && lex_less(p, best_p))) {
                best_score = score;
                best_p = p;
            }
        }
        if (best_score <= margin) continue;

        const Complex p = best_p;
        const Complex front = -((m1 - 2.0) * p - m2);
        const Complex denom = p * ((m1 - 1.0) * p - m2 + 1.0);
        const Complex a2 = front * (m1 * p + 1.0) / denom;
        const Complex a1 = front * ((m1 * m1 - 2.0 * m1) * p - m2 * m1) / denom;
        return normalized_quadratic(a2, a1);
    }

    std::ostringstream os;
    os << "spectrum_to_normalized: no admissible ordered pair for spectrum {"
       << m[0] << ", " << m[1] << ", " << m[2] << "}";
    throw NumericalError(os.str());
}

} // namespace ratmoduli
