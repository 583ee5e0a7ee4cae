#include "ratmoduli/moebius.hpp"

#include <cmath>

#include "ratmoduli/ratmap.hpp"

namespace ratmoduli {

MoebiusTransform MoebiusTransform::translation(Complex offset) {
    return {Complex(1.0), offset, Complex(0.0), Complex(1.0)};
}

MoebiusTransform MoebiusTransform::normalized() const {
    double best = std::abs(a);
    Complex pivot = a;
    for (Complex e : {b, c, d}) {
        if (std::abs(e) > best) {
            best = std::abs(e);
            pivot = e;
        }
    }
    if (best == 0.0) return *this;
    return {a / pivot, b / pivot, c / pivot, d / pivot};
}

MoebiusTransform MoebiusTransform::make(Complex a, Complex b, Complex c, Complex d,
                                        const Tolerances& tol) {
    const MoebiusTransform t = MoebiusTransform{a, b, c, d}.normalized();
    if (std::abs(t.determinant()) <= tol.zero_test)
        throw InvalidInputError("moebius transform is not invertible (ad - bc vanishes)");
    return t;
}

SpherePoint apply(const MoebiusTransform& t, SpherePoint z) {
    if (z.infinite) {
        if (std::abs(t.c) == 0.0) return SpherePoint::infinity();
        return SpherePoint::at(t.a / t.c);
    }
    const Complex denom = t.c * z.value + t.d;
    const Complex numer = t.a * z.value + t.b;
    const double scale = std::max({std::abs(t.c) * std::abs(z.value), std::abs(t.d), 1.0});
    if (std::abs(denom) <= 1e-14 * scale && std::abs(numer) > std::abs(denom))
        return SpherePoint::infinity();
    return SpherePoint::at(numer / denom);
}

MoebiusTransform compose(const MoebiusTransform& s, const MoebiusTransform& t) {
    return MoebiusTransform{s.a * t.a + s.b * t.c, s.a * t.b + s.b * t.d,
                            s.c * t.a + s.d * t.c, s.c * t.b + s.d * t.d}
        .normalized();
}

MoebiusTransform inverse(const MoebiusTransform& t) {
    return MoebiusTransform{t.d, -t.b, -t.c, t.a}.normalized();
}

namespace {

// q(z)^k for k = 0..n.
std::vector<Poly> power_table(const Poly& q, int n) {
    std::vector<Poly> table{Poly::constant(Complex(1.0))};
    for (int k = 1; k <= n; ++k) table.push_back(table.back() * q);
    return table;
}

Poly trim_absolute(const Poly& p, double cut) {
    std::vector<Complex> c = p.coeffs();
    while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
    return Poly(std::move(c));
}

} // namespace

RationalMap conjugate_map(const RationalMap& r, const MoebiusTransform& t_in,
                          const Tolerances& tol) {
    const MoebiusTransform t = t_in.normalized();
    if (std::abs(t.determinant()) <= tol.zero_test)
        throw InvalidInputError("conjugating transform is not invertible");
    // max of the two degrees so the same substitution serves canonicalize(),
    // which feeds fractions whose denominator degree is still too low.
    const int d = std::max(r.num.degree(), r.den.degree());

    // R(t(z)) = U/V with U, V the degree-d homogenizations of num, den composed
    // with (a z + b, c z + d); then apply t^{-1}(w) = (dw - b)/(-cw + a).
    const Poly up{t.b, t.a};   // a z + b, ascending
    const Poly down{t.d, t.c}; // c z + d
    const std::vector<Poly> ups = power_table(up, d);
    const std::vector<Poly> downs = power_table(down, d);

    Poly u, v;
    for (int k = 0; k <= d; ++k) {
        const Poly cross =
            ups[static_cast<std::size_t>(k)] * downs[static_cast<std::size_t>(d - k)];
        if (r.num.coeff(k) != Complex(0.0)) u = u + r.num.coeff(k) * cross;
        if (r.den.coeff(k) != Complex(0.0)) v = v + r.den.coeff(k) * cross;
    }

    Poly new_num = t.d * u - t.b * v;
    Poly new_den = t.a * v - t.c * u;

    // Cancellation can leave roundoff residue in coefficients that are really
    // zero; cut against the scale of the operands, not of the result.
    const double cut = tol.zero_test * std::max({u.max_abs_coeff(), v.max_abs_coeff(), 1.0});
    new_num = trim_absolute(new_num, cut);
    new_den = trim_absolute(new_den, cut);

    if (new_den.degree() < d)
        throw DegenerateConjugationError(
            "conjugation moved a fixed point to infinity (denominator degree dropped)");

    const Complex lead = new_den.leading();
    RationalMap out{Complex(1.0) / lead * new_num, Complex(1.0) / lead * new_den};
    validate_canonical(out, tol);
    return out;
}

} // namespace ratmoduli
