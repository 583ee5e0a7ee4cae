#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ratmoduli/errors.hpp"

namespace ratmoduli {

using Complex = std::complex<double>;

// Knobs shared by every numeric routine.  All thresholds are relative: callers
// scale them by the magnitude of whatever quantity is being tested.
struct Tolerances {
    double root_refine = 1e-12;    // Newton / Aberth stopping threshold
    double cluster_radius = 1e-7;  // base radius for merging nearby roots
    double zero_test = 1e-9;       // "is this coefficient zero" threshold

    // Throws InvalidInputError unless 0 < root_refine < cluster_radius and zero_test > 0.
    void validate() const;

    // zero_test scaled to a quantity of the given magnitude.
    double zero_at(double scale) const { return zero_test * (scale > 1.0 ? scale : 1.0); }
};

// Dense univariate polynomial over the complex doubles, coefficients ascending
// (coeffs()[k] multiplies z^k).  The zero polynomial has an empty coefficient
// vector and degree -1.  Construction trims coefficients that are exactly zero;
// use trimmed() to drop numerically negligible leading coefficients.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Complex> ascending);
    explicit Poly(std::vector<Complex> ascending);

    static Poly constant(Complex c);
    static Poly identity(); // z
    // Monic product of (z - r) over all given roots, repeats included.
    static Poly from_roots(const std::vector<Complex>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Complex>& coeffs() const { return c_; }
    // Coefficient of z^k; zero beyond the degree.
    Complex coeff(int k) const;
    Complex leading() const;
    double max_abs_coeff() const;

    Complex operator()(Complex z) const; // Horner
    // First-order bound on the roundoff in operator() at z.
    double eval_error_bound(Complex z) const;

    Poly derivative() const;
    // Coefficients of p(z + center), i.e. the Taylor expansion about center.
    Poly shifted(Complex center) const;
    // Coefficients reversed: z^n * p(1/z) for n = degree().
    Poly reversed() const;
    // Copy with leading coefficients of magnitude <= zero_test * max|coeff| dropped.
    Poly trimmed(double relative_eps) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Complex s, const Poly& a);
    Poly operator-() const;
    bool operator==(const Poly& other) const { return c_ == other.c_; }

private:
    void trim_exact_zeros();
    std::vector<Complex> c_;
};

// Quotient and remainder with deg(rem) < deg(divisor).  Throws InvalidInputError
// on a zero divisor.
std::pair<Poly, Poly> divrem(const Poly& p, const Poly& divisor);

// A root location together with how many roots of the polynomial it absorbs.
struct RootCluster {
    Complex value;
    int multiplicity = 1;
};

// All roots of p grouped into clusters whose multiplicities sum to deg(p).
// Simultaneous Aberth-Ehrlich iteration locates the roots; nearby approximations
// are merged (an m-fold root computed in doubles splits into a cloud of radius
// roughly eps^(1/m), so merging is confirmed by checking that p and its first
// m-1 derivatives vanish at the refined center to within evaluation roundoff).
// Each cluster center is polished by Newton on the (m-1)-th derivative.
// Throws InvalidInputError for constant p, NumericalError on non-convergence.
std::vector<RootCluster> roots_with_multiplicities(const Poly& p, const Tolerances& tol = {});

// Resultant of p and q via the Sylvester matrix determinant (LU with partial
// pivoting).  Throws InvalidInputError if both are constant or either is zero.
Complex resultant(const Poly& p, const Poly& q);

// |resultant| divided by the Frobenius norm of the Sylvester matrix; compare
// against zero_test to decide whether p and q share a root.  (A product-of-row
// -norms scale would shrink exponentially with the degree and misclassify
// well-conditioned high-degree pairs.)
double resultant_relative(const Poly& p, const Poly& q);

// Discriminant of p: (-1)^(n(n-1)/2) * resultant(p, p') / lc(p), n = deg(p).
// Requires deg(p) >= 2.
Complex discriminant(const Poly& p);

// Newton iteration on p from x0, stopping when the step or the residual falls
// below the relative threshold.  Returns the best point found.
Complex newton_refine(const Poly& p, Complex x0, double step_tol, int max_iter = 60);

} // namespace ratmoduli
