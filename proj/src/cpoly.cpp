#include "ratmoduli/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <sstream>

namespace ratmoduli {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2.0;

std::string complex_str(Complex z) {
    std::ostringstream os;
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace

void Tolerances::validate() const {
    if (!(root_refine > 0.0) || !(cluster_radius > 0.0) || !(zero_test > 0.0))
        throw InvalidInputError("tolerances must be positive");
    if (!(cluster_radius > root_refine))
        throw InvalidInputError("cluster_radius must exceed root_refine");
}

Poly::Poly(std::initializer_list<Complex> ascending) : c_(ascending) { trim_exact_zeros(); }

Poly::Poly(std::vector<Complex> ascending) : c_(std::move(ascending)) { trim_exact_zeros(); }

void Poly::trim_exact_zeros() {
    while (!c_.empty() && c_.back() == Complex(0.0, 0.0)) c_.pop_back();
}

Poly Poly::constant(Complex c) { return Poly{c}; }

Poly Poly::identity() { return Poly{Complex(0.0), Complex(1.0)}; }

Poly Poly::from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{Complex(1.0)};
    for (Complex r : roots) {
        c.push_back(Complex(0.0));
        for (std::size_t k = c.size(); k-- > 1;) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return Poly(std::move(c));
}

Complex Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Complex(0.0);
    return c_[static_cast<std::size_t>(k)];
}

Complex Poly::leading() const { return c_.empty() ? Complex(0.0) : c_.back(); }

double Poly::max_abs_coeff() const {
    double m = 0.0;
    for (const Complex& c : c_) m = std::max(m, std::abs(c));
    return m;
}

Complex Poly::operator()(Complex z) const {
    Complex acc(0.0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
}

double Poly::eval_error_bound(Complex z) const {
    const double az = std::abs(z);
    double majorant = 0.0;
    for (std::size_t k = c_.size(); k-- > 0;) majorant = majorant * az + std::abs(c_[k]);
    const double n = static_cast<double>(c_.size());
    return (4.0 * n + 2.0) * kUnitRoundoff * majorant;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::shifted(Complex center) const {
    // In-place Horner shift: after pass i, the low coefficients hold the Taylor
    // expansion of p about `center` up to order i.
    std::vector<Complex> a = c_;
    const int n = static_cast<int>(a.size()) - 1;
    for (int i = 0; i < n; ++i)
        for (int k = n - 1; k >= i; --k)
            a[static_cast<std::size_t>(k)] += center * a[static_cast<std::size_t>(k + 1)];
    return Poly(std::move(a));
}

Poly Poly::reversed() const {
    std::vector<Complex> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Poly Poly::trimmed(double relative_eps) const {
    const double cut = relative_eps * max_abs_coeff();
    std::vector<Complex> c = c_;
    while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()), Complex(0.0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()), Complex(0.0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Complex> c(a.c_.size() + b.c_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(Complex s, const Poly& a) {
    std::vector<Complex> c = a.c_;
    for (Complex& v : c) v *= s;
    return Poly(std::move(c));
}

Poly Poly::operator-() const { return Complex(-1.0) * *this; }

std::pair<Poly, Poly> divrem(const Poly& p, const Poly& divisor) {
    if (divisor.is_zero()) throw InvalidInputError("division by the zero polynomial");
    const int dn = divisor.degree();
    if (p.degree() < dn) return {Poly(), p};
    std::vector<Complex> rem(p.coeffs());
    std::vector<Complex> quot(static_cast<std::size_t>(p.degree() - dn) + 1, Complex(0.0));
    const Complex lead = divisor.leading();
    for (int k = p.degree() - dn; k >= 0; --k) {
        const Complex f = rem[static_cast<std::size_t>(k + dn)] / lead;
        quot[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= dn; ++j)
            rem[static_cast<std::size_t>(k + j)] -= f * divisor.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(dn > 0 ? dn : 0));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Complex newton_refine(const Poly& p, Complex x0, double step_tol, int max_iter) {
    const Poly dp = p.derivative();
    Complex x = x0;
    for (int it = 0; it < max_iter; ++it) {
        const Complex fx = p(x);
        if (std::abs(fx) <= p.eval_error_bound(x)) break;
        const Complex dfx = dp(x);
        if (std::abs(dfx) == 0.0) break;
        const Complex step = fx / dfx;
        if (std::abs(step) > 0.5 * (1.0 + std::abs(x))) break; // diverging; keep what we have
        x -= step;
        if (std::abs(step) <= step_tol * (1.0 + std::abs(x))) break;
    }
    return x;
}

namespace {

// Aberth-Ehrlich simultaneous iteration.  Deterministic start: points equally
// spaced on a circle of radius 1 + max|coeff|/|lc|, rotated off the axes.
std::vector<Complex> aberth(const Poly& p, const Tolerances& tol) {
    const int n = p.degree();
    const Poly dp = p.derivative();
    const double radius = 1.0 + p.max_abs_coeff() / std::abs(p.leading());
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / n + 0.4;
        z[static_cast<std::size_t>(i)] = radius * Complex(std::cos(theta), std::sin(theta));
    }
    std::vector<bool> done(z.size(), false);
    const int max_sweeps = 200;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst_step = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i]) continue;
            const Complex fz = p(z[i]);
            if (std::abs(fz) <= p.eval_error_bound(z[i])) {
                done[i] = true;
                continue;
            }
            const Complex dfz = dp(z[i]);
            Complex newton = (std::abs(dfz) > 0.0) ? fz / dfz
                                                   : Complex(tol.root_refine, tol.root_refine);
            Complex repel(0.0);
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j == i) continue;
                const Complex diff = z[i] - z[j];
                if (std::abs(diff) == 0.0) continue;
                repel += Complex(1.0) / diff;
            }
            const Complex denom = Complex(1.0) - newton * repel;
            const Complex step = (std::abs(denom) > 1e-30) ? newton / denom : newton;
            z[i] -= step;
            const double rel = std::abs(step) / (1.0 + std::abs(z[i]));
            worst_step = std::max(worst_step, rel);
            if (rel <= tol.root_refine) done[i] = true;
        }
        if (worst_step <= tol.root_refine) break;
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double residual = std::abs(p(z[i]));
        const double accept = 1e6 * p.eval_error_bound(z[i]); // clustering re-verifies anyway
        if (!done[i] && residual > accept) {
            std::ostringstream os;
            os << "root iteration did not converge for degree " << n
               << " polynomial; residual " << residual << " at " << complex_str(z[i]);
            throw NumericalError(os.str());
        }
    }
    return z;
}

// True when p and its derivatives up to order m-1 all vanish at c within
// evaluation roundoff, i.e. the data is consistent with an m-fold root at c.
bool consistent_multiple_root(const std::vector<Poly>& derivatives, Complex c, int m) {
    for (int j = 0; j < m; ++j) {
        const Poly& q = derivatives[static_cast<std::size_t>(j)];
        if (std::abs(q(c)) > 8.0 * q.eval_error_bound(c)) return false;
    }
    return true;
}

struct Cluster {
    std::vector<Complex> members;
    Complex center{0.0};
    bool verified = false; // center came from a confirmed multiple-root refinement

    int count() const { return static_cast<int>(members.size()); }
    void recenter() {
        Complex s(0.0);
        for (Complex m : members) s += m;
        center = s / static_cast<double>(members.size());
    }
};

// Union-find single linkage over cluster centers; returns groups of indices.
std::vector<std::vector<std::size_t>> link_groups(const std::vector<Cluster>& cs, double radius) {
    std::vector<std::size_t> rep(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) rep[i] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j) {
                if (rep[i] == rep[j]) continue;
                if (std::abs(cs[i].center - cs[j].center) <= radius) {
                    const std::size_t from = std::max(rep[i], rep[j]);
                    const std::size_t to = std::min(rep[i], rep[j]);
                    for (std::size_t& r : rep)
                        if (r == from) r = to;
                    changed = true;
                }
            }
    }
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (rep[i] != i) continue;
        std::vector<std::size_t> g;
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (rep[j] == i) g.push_back(j);
        groups.push_back(std::move(g));
    }
    return groups;
}

// Attempt to merge the clusters with the given indices as one multiple root,
// greedily discarding the farthest constituent until the rest verifies.
// On success replaces the constituents in `cs` and returns true.
bool try_merge(std::vector<Cluster>& cs, std::vector<std::size_t> idxs,
               const std::vector<Poly>& derivatives, double refine_tol) {
    while (idxs.size() >= 2) {
        int total = 0;
        Complex mean(0.0);
        for (std::size_t i : idxs) {
            total += cs[i].count();
            mean += cs[i].center * static_cast<double>(cs[i].count());
        }
        mean /= static_cast<double>(total);
        const Complex refined =
            newton_refine(derivatives[static_cast<std::size_t>(total - 1)], mean, refine_tol);
        if (consistent_multiple_root(derivatives, refined, total)) {
            Cluster merged;
            merged.center = refined;
            merged.verified = true;
            for (std::size_t i : idxs)
                merged.members.insert(merged.members.end(), cs[i].members.begin(),
                                      cs[i].members.end());
            std::sort(idxs.rbegin(), idxs.rend());
            for (std::size_t i : idxs) cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
            cs.push_back(std::move(merged));
            return true;
        }
        std::size_t worst = 0;
        double worst_dist = -1.0;
        for (std::size_t k = 0; k < idxs.size(); ++k) {
            const double dist = std::abs(cs[idxs[k]].center - refined);
            if (dist > worst_dist) {
                worst_dist = dist;
                worst = k;
            }
        }
        idxs.erase(idxs.begin() + static_cast<std::ptrdiff_t>(worst));
    }
    return false;
}

} // namespace

std::vector<RootCluster> roots_with_multiplicities(const Poly& p, const Tolerances& tol) {
    tol.validate();
    if (p.is_zero()) throw InvalidInputError("cannot take roots of the zero polynomial");
    if (p.degree() < 1) throw InvalidInputError("cannot take roots of a constant polynomial");

    // Exact trailing zeros are exact roots at the origin; peel them off first.
    std::vector<Complex> work = p.coeffs();
    int zero_roots = 0;
    while (work.size() > 1 && work.front() == Complex(0.0)) {
        work.erase(work.begin());
        ++zero_roots;
    }
    const Poly deflated(std::move(work));

    std::vector<Cluster> clusters;
    for (int k = 0; k < zero_roots; ++k)
        clusters.push_back(Cluster{{Complex(0.0)}, Complex(0.0), false});
    if (deflated.degree() >= 1)
        for (Complex r : aberth(deflated, tol)) clusters.push_back(Cluster{{r}, r, false});

    double scale = 1.0;
    for (const Cluster& c : clusters) scale = std::max(scale, 1.0 + std::abs(c.center));

    const int n = p.degree();
    std::vector<Poly> derivatives{p};
    for (int j = 1; j < n; ++j) derivatives.push_back(derivatives.back().derivative());

    // Base pass: unconditional single linkage at the configured radius.
    {
        std::vector<Cluster> next;
        for (const auto& g : link_groups(clusters, tol.cluster_radius * scale)) {
            Cluster c;
            for (std::size_t i : g)
                c.members.insert(c.members.end(), clusters[i].members.begin(),
                                 clusters[i].members.end());
            c.recenter();
            next.push_back(std::move(c));
        }
        clusters = std::move(next);
    }

    // An m-fold root computed in doubles splinters into a ring of radius about
    // eps^(1/m), far wider than any fixed threshold.  Sweep progressively
    // tighter radii, keeping a merge only when the combined cluster verifiably
    // behaves like a root of its total multiplicity.
    const double noise = 64.0 * n * kUnitRoundoff;
    for (int m = n; m >= 2; --m) {
        const double radius = scale * 4.0 * std::pow(noise, 1.0 / m);
        if (radius <= tol.cluster_radius * scale) continue;
        bool merged = true;
        while (merged && clusters.size() > 1) {
            merged = false;
            for (const auto& g : link_groups(clusters, radius)) {
                if (g.size() < 2) continue;
                if (try_merge(clusters, g, derivatives, kUnitRoundoff)) {
                    merged = true;
                    break;
                }
            }
        }
    }

    std::vector<RootCluster> out;
    out.reserve(clusters.size());
    for (Cluster& c : clusters) {
        const int m = c.count();
        Complex value = c.center;
        if (!c.verified) {
            c.recenter();
            value = newton_refine(derivatives[static_cast<std::size_t>(m - 1)], c.center,
                                  tol.root_refine);
            // For singletons the Aberth point is already polished; keep whichever
            // evaluates smaller so we never drift toward a neighbouring root.
            if (m == 1 && std::abs(p(c.center)) < std::abs(p(value))) value = c.center;
        }
        out.push_back(RootCluster{value, m});
    }
    std::sort(out.begin(), out.end(),
              [](const RootCluster& a, const RootCluster& b) { return lex_less(a.value, b.value); });

    return out;
}

namespace {

// Determinant of a dense complex matrix by LU with partial pivoting, together
// with the Frobenius norm for scale-aware zero tests.
struct DetResult {
    Complex det;
    double frobenius;
};

DetResult lu_determinant(std::vector<std::vector<Complex>> m) {
    const std::size_t n = m.size();
    DetResult r{Complex(1.0), 0.0};
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sq += std::norm(m[i][j]);
    r.frobenius = std::sqrt(sq);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(m[col][col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double a = std::abs(m[row][col]);
            if (a > best) {
                best = a;
                pivot = row;
            }
        }
        if (best == 0.0) return {Complex(0.0), r.frobenius};
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            r.det = -r.det;
        }
        r.det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            const Complex f = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return r;
}

DetResult sylvester_determinant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero())
        throw InvalidInputError("resultant requires nonzero polynomials");
    const int dp = p.degree();
    const int dq = q.degree();
    if (dp == 0 && dq == 0)
        throw InvalidInputError("resultant requires at least one nonconstant polynomial");
    const std::size_t n = static_cast<std::size_t>(dp + dq);
    std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n, Complex(0.0)));
    for (int row = 0; row < dq; ++row)
        for (int k = 0; k <= dp; ++k)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = p.coeff(dp - k);
    for (int row = 0; row < dp; ++row)
        for (int k = 0; k <= dq; ++k)
            m[static_cast<std::size_t>(dq + row)][static_cast<std::size_t>(row + k)] =
                q.coeff(dq - k);
    return lu_determinant(std::move(m));
}

} // namespace

Complex resultant(const Poly& p, const Poly& q) { return sylvester_determinant(p, q).det; }

double resultant_relative(const Poly& p, const Poly& q) {
    const DetResult r = sylvester_determinant(p, q);
    if (r.frobenius == 0.0) return 0.0;
    return std::abs(r.det) / r.frobenius;
}

Complex discriminant(const Poly& p) {
    const int n = p.degree();
    if (n < 2) throw InvalidInputError("discriminant requires degree >= 2");
    const Complex res = resultant(p, p.derivative());
    const double sign = (((n * (n - 1)) / 2) % 2 == 0) ? 1.0 : -1.0;
    return sign * res / p.leading();
}

} // namespace ratmoduli
