// End-to-end acceptance checks.  Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ratmoduli/mapgen.hpp"
#include "ratmoduli/normalform.hpp"
#include "ratmoduli/quadratic.hpp"
#include "ratmoduli/strata.hpp"

using namespace ratmoduli;

namespace {

std::string format_complex(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g%+.3gi", z.real(), z.imag());
    return buf;
}

bool rel_close(Complex got, Complex want, double eps) {
    return std::abs(got - want) <= eps * std::max(1.0, std::abs(want));
}

// ---- shared generators ----------------------------------------------------

std::vector<Complex> distinct_points(SplitMix64& rng, std::size_t count) {
    for (;;) {
        std::vector<Complex> zetas;
        bool ok = true;
        for (std::size_t i = 0; i < count; ++i) {
            const Complex z = 1.5 * rng.unit_disk();
            for (Complex w : zetas) {
                if (std::abs(z - w) < 0.3) ok = false;
            }
            zetas.push_back(z);
        }
        if (ok) return zetas;
    }
}

// A canonical map whose fixed point multiplicities realize the given partition:
// choose the fixed point polynomial as a product of powers, a random monic
// denominator, and read the numerator off as z*den - phat.
RationalMap multiple_point_map(SplitMix64& rng, int degree, const std::vector<int>& parts,
                               const Tolerances& tol = {}) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        const auto zetas = distinct_points(rng, parts.size());
        std::vector<Complex> roots;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (int k = 0; k < parts[i]; ++k) roots.push_back(zetas[i]);
        }
        const Poly phat = Poly::from_roots(roots);
        std::vector<Complex> qc(static_cast<std::size_t>(degree) + 1);
        for (int k = 0; k < degree; ++k) qc[k] = rng.unit_disk();
        qc[static_cast<std::size_t>(degree)] = Complex(1.0);
        const Poly den{std::move(qc)};
        const Poly num = Poly::identity() * den - phat;
        if (num.degree() < 1 || num.degree() > degree) continue;
        if (resultant_relative(num, den) <= tol.zero_test) continue;
        return RationalMap{num, den};
    }
    throw NumericalError("could not construct a multiple fixed point instance");
}

void partitions_of(int n, int max_part, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        current.push_back(k);
        partitions_of(n - k, k, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    partitions_of(n, n, current, out);
    return out;
}

// ---- criteria --------------------------------------------------------------

// Conjugating (-3z^3-4z^2-2z)/(z^3-z-1) by t(z) = z/(pz-1-p) must reproduce the
// closed-form coefficient family over (p+1)^2, land in the normalized family,
// and carry the multiplier spectrum of the one-parameter form indexed by
// 1/(p+1)^2.
std::string criterion_conjugation_family() {
    const RationalMap r{Poly{Complex(0.0), Complex(-2.0), Complex(-4.0), Complex(-3.0)},
                        Poly{Complex(-1.0), Complex(-1.0), Complex(0.0), Complex(1.0)}};
    const std::vector<Complex> ps = {Complex(0.0), Complex(1.0), Complex(-2.0), Complex(0.0, 1.0)};
    for (Complex p : ps) {
        const auto t = MoebiusTransform::make(Complex(1.0), Complex(0.0), p, Complex(-1.0) - p);
        const RationalMap got = conjugate_map(r, t);

        const Complex s = (p + Complex(1.0)) * (p + Complex(1.0));
        const Poly want_num{Complex(0.0), (2.0 * p * p + 4.0 * p + 2.0) / s,
                            (-4.0 * p * p - 8.0 * p - 4.0) / s, (2.0 * p * p + 4.0 * p + 3.0) / s};
        const Poly want_den{(p * p + 2.0 * p + 1.0) / s, (-p * p - 2.0 * p - 1.0) / s,
                            (-p * p - 2.0 * p) / s, (p * p + 2.0 * p + 1.0) / s};
        for (int k = 0; k <= 3; ++k) {
            if (!rel_close(got.num.coeff(k), want_num.coeff(k), 1e-10) ||
                !rel_close(got.den.coeff(k), want_den.coeff(k), 1e-10)) {
                return "coefficients diverge from the closed form at p=" + format_complex(p);
            }
        }
        if (!is_normalized(got)) {
            return "conjugate not in the normalized family at p=" + format_complex(p);
        }

        const Complex pt = Complex(1.0) / s;
        const RationalMap family{Poly{Complex(0.0), Complex(2.0), Complex(-4.0), pt + 2.0},
                                 Poly{Complex(1.0), Complex(-1.0), pt - 1.0, Complex(1.0)}};
        const double dist = testutil::multiset_distance(testutil::multiplier_multiset(got),
                                                        testutil::multiplier_multiset(family));
        if (dist > 1e-8) {
            return "multiplier spectrum off by " + std::to_string(dist) +
                   " at p=" + format_complex(p);
        }
    }
    return {};
}

// The two pinned spectra must come back as their exact representatives.
std::string criterion_spectrum_representatives() {
    const RationalMap triple = spectrum_to_normalized({Complex(1.0), Complex(1.0), Complex(1.0)});
    const Poly tn{Complex(0.0), Complex(1.0), Complex(-1.0)};
    const Poly td{Complex(1.0), Complex(-1.0), Complex(1.0)};
    if (testutil::coeff_distance(triple.num, tn) > 1e-12 ||
        testutil::coeff_distance(triple.den, td) > 1e-12) {
        return "spectrum (1,1,1) did not return (-z^2+z)/(z^2-z+1)";
    }
    const RationalMap parab = spectrum_to_normalized({Complex(0.0), Complex(0.0), Complex(2.0)});
    const Poly pn{Complex(0.0), Complex(0.0), Complex(1.5)};
    if (testutil::coeff_distance(parab.num, pn) > 1e-12 ||
        testutil::coeff_distance(parab.den, td) > 1e-12) {
        return "spectrum (0,0,2) did not return (3/2)z^2/(z^2-z+1)";
    }
    return {};
}

// Closed-form multiplier symmetric functions against the ones computed from
// the fixed points directly, over seeded coefficient pairs.
std::string criterion_sigma_agreement() {
    SplitMix64 rng(12345);
    int done = 0;
    while (done < 200) {
        const Complex a2 = 2.0 * rng.unit_disk();
        const Complex a1 = 2.0 * rng.unit_disk();
        if (std::abs(a2 * a2 + a1 * a2 + a1 * a1) <= 1e-3) continue;
        ++done;
        const SigmaD2 sym = sigma_from_normalized(a2, a1);
        const RationalMap r{Poly{Complex(0.0), a1, a2},
                            Poly{Complex(1.0), Complex(-1.0), Complex(1.0)}};
        const auto ms = testutil::multiplier_multiset(r);
        const Complex e1 = ms[0] + ms[1] + ms[2];
        const Complex e2 = ms[0] * ms[1] + ms[0] * ms[2] + ms[1] * ms[2];
        const Complex e3 = ms[0] * ms[1] * ms[2];
        if (!rel_close(sym.s1, e1, 1e-8) || !rel_close(sym.s2, e2, 1e-8) ||
            !rel_close(sym.s3, e3, 1e-8)) {
            return "sigma mismatch at a2=" + format_complex(a2) + " a1=" + format_complex(a1);
        }
        if (std::abs(sym.s3 - sym.s1 + Complex(2.0)) > 1e-10) {
            return "sigma3 - sigma1 + 2 != 0 at a2=" + format_complex(a2) +
                   " a1=" + format_complex(a1);
        }
    }
    return {};
}

// Fixed point index sums: 1 for random maps (all simple), and the first-order
// expansion coefficients summing to 1 on constructed multiple point maps.
std::string criterion_index_sums() {
    SplitMix64 rng(777);
    for (int d = 2; d <= 5; ++d) {
        double worst = 0.0;
        for (int k = 0; k < 500; ++k) {
            const RationalMap r = random_canonical_map(rng, d);
            worst = std::max(worst, std::abs(fatou_sum(r) - Complex(1.0)));
        }
        if (worst >= 1e-7) {
            return "index sum off by " + std::to_string(worst) + " at degree " +
                   std::to_string(d);
        }
    }
    SplitMix64 rng2(778);
    for (int d = 2; d <= 5; ++d) {
        for (const auto& parts : partitions_of(d + 1)) {
            if (parts[0] < 2) continue;
            for (int k = 0; k < 5; ++k) {
                const RationalMap r = multiple_point_map(rng2, d, parts);
                Complex sum(0.0);
                for (const auto& pt : decompose(r).points) sum += pt.alphas[0];
                if (std::abs(sum - Complex(1.0)) >= 1e-7) {
                    return "first order coefficients sum to " + format_complex(sum) +
                           " at degree " + std::to_string(d);
                }
            }
        }
    }
    return {};
}

// normalize() must land in the normalized family while preserving the overlap
// type and the multiplier spectrum, including the retry instance whose first
// scaling equation degenerates.
std::string criterion_normalize() {
    SplitMix64 rng(31337);
    for (int d = 2; d <= 5; ++d) {
        for (int k = 0; k < 500; ++k) {
            const RationalMap r = random_canonical_map(rng, d);
            const auto trace = normalize(r);
            if (!is_normalized(trace.result)) {
                return "result not normalized at degree " + std::to_string(d) + " sample " +
                       std::to_string(k);
            }
            if (!(overlap_type(r) == overlap_type(trace.result))) {
                return "overlap type changed at degree " + std::to_string(d) + " sample " +
                       std::to_string(k);
            }
            const double dist = testutil::multiset_distance(
                testutil::multiplier_multiset(r), testutil::multiplier_multiset(trace.result));
            if (dist > 1e-7) {
                return "multiplier spectrum moved by " + std::to_string(dist) + " at degree " +
                       std::to_string(d) + " sample " + std::to_string(k);
            }
        }
    }
    const RationalMap tricky{Poly{Complex(0.0), Complex(2.0)},
                             Poly{Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)}};
    const auto trace = normalize(tricky);
    if (trace.attempts < 2) return "degenerate instance did not go through the retry path";
    if (!is_normalized(trace.result)) return "degenerate instance not normalized";
    if (testutil::multiset_distance(testutil::multiplier_multiset(tricky),
                                    testutil::multiplier_multiset(trace.result)) > 1e-7) {
        return "degenerate instance changed its multiplier spectrum";
    }
    return {};
}

DecompositionParams random_params(SplitMix64& rng, const std::vector<int>& parts) {
    for (;;) {
        const auto zetas = distinct_points(rng, parts.size());
        DecompositionParams params;
        Complex head(0.0);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            DecompositionPoint pt;
            pt.zeta = zetas[i];
            pt.multiplicity = parts[i];
            for (int l = 0; l < parts[i]; ++l) pt.alphas.push_back(rng.unit_disk());
            params.points.push_back(std::move(pt));
        }
        for (std::size_t i = 0; i + 1 < params.points.size(); ++i) head += params.points[i].alphas[0];
        params.points.back().alphas[0] = Complex(1.0) - head;
        bool ok = true;
        for (const auto& pt : params.points) {
            if (std::abs(pt.alphas.back()) < 0.05) ok = false;
        }
        if (ok) return params;
    }
}

// Both orders of the coordinate round trip, over random maps and over every
// overlap type of degrees two and three, plus the worked coefficient values.
std::string criterion_coordinate_round_trip() {
    SplitMix64 rng(2024);
    for (int d = 2; d <= 4; ++d) {
        for (int k = 0; k < 200; ++k) {
            const RationalMap r = random_canonical_map(rng, d);
            const RationalMap back = recompose(decompose(r));
            if (testutil::map_distance(back, r) > 1e-8) {
                return "recompose(decompose) drifted at degree " + std::to_string(d) +
                       " sample " + std::to_string(k);
            }
        }
    }

    SplitMix64 rng2(2025);
    const std::vector<std::vector<int>> types = {{3}, {2, 1}, {4}, {3, 1}, {2, 2}};
    for (const auto& parts : types) {
        for (int k = 0; k < 40; ++k) {
            auto params = random_params(rng2, parts);
            const RationalMap r = recompose(params);
            auto again = decompose(r);
            std::sort(params.points.begin(), params.points.end(),
                      [](const DecompositionPoint& a, const DecompositionPoint& b) {
                          return testutil::lex_less(a.zeta, b.zeta);
                      });
            if (again.points.size() != params.points.size()) {
                return "point count changed through the round trip";
            }
            for (std::size_t i = 0; i < params.points.size(); ++i) {
                const auto& want = params.points[i];
                const auto& got = again.points[i];
                if (got.multiplicity != want.multiplicity ||
                    std::abs(got.zeta - want.zeta) > 1e-8) {
                    return "fixed point moved through the round trip";
                }
                for (std::size_t l = 0; l < want.alphas.size(); ++l) {
                    if (std::abs(got.alphas[l] - want.alphas[l]) > 1e-8) {
                        return "expansion coefficient drifted through the round trip";
                    }
                }
            }
        }
    }

    const RationalMap worked{Poly{Complex(0.0), Complex(-2.0), Complex(-4.0), Complex(-3.0)},
                             Poly{Complex(-1.0), Complex(-1.0), Complex(0.0), Complex(1.0)}};
    const auto params = decompose(worked);
    if (params.points.size() != 2) return "worked example has the wrong point count";
    const auto& cusp = params.points[0];
    const auto& simple = params.points[1];
    if (std::abs(cusp.alphas[0] - Complex(2.0)) > 1e-10 ||
        std::abs(cusp.alphas[1] - Complex(-1.0)) > 1e-10 ||
        std::abs(cusp.alphas[2] - Complex(1.0)) > 1e-10 ||
        std::abs(simple.alphas[0] - Complex(-1.0)) > 1e-10) {
        return "worked expansion coefficients are off";
    }
    return {};
}

// The locus polynomial vanishes exactly on the constructed multiple point maps
// and tracks the fixed point discriminant (up to the degree-dependent sign) on
// random maps.
std::string criterion_locus() {
    SplitMix64 rng(555);
    for (int d = 2; d <= 4; ++d) {
        for (const auto& parts : partitions_of(d + 1)) {
            if (parts[0] < 2) continue;
            for (int k = 0; k < 5; ++k) {
                const RationalMap r = multiple_point_map(rng, d, parts);
                const double rel = locus_residual_relative(r);
                if (rel >= 1e-8) {
                    return "residual " + std::to_string(rel) +
                           " on a multiple point map of degree " + std::to_string(d);
                }
            }
        }
    }
    SplitMix64 rng2(556);
    for (int d = 2; d <= 3; ++d) {
        const double sign = (d == 2) ? 1.0 : -1.0;
        for (int k = 0; k < 200; ++k) {
            const RationalMap r = random_canonical_map(rng2, d);
            const Complex disc = discriminant(fixed_point_polynomial(r));
            if (!rel_close(locus_residual(r), sign * disc, 1e-8)) {
                return "locus value diverged from the discriminant at degree " +
                       std::to_string(d);
            }
            if (locus_residual_relative(r) < 1e-8) {
                return "locus vanished on a simple spectrum map at degree " + std::to_string(d);
            }
        }
    }
    return {};
}

// Closed-form dimensions for every overlap type.
std::string criterion_dimensions() {
    for (int d = 2; d <= 6; ++d) {
        for (const auto& parts : partitions_of(d + 1)) {
            const int p = static_cast<int>(parts.size());
            const auto dims = stratum_dims(OverlapType{parts}, d);
            if (dims.locus_dim != d + p || dims.fiber_dim != d + 1 - p) {
                return "wrong dimensions at degree " + std::to_string(d) + " with " +
                       std::to_string(p) + " parts";
            }
        }
    }
    return {};
}

// The one-point stratum of degree two is the single pinned map.
std::string criterion_singleton_stratum() {
    DecompositionParams params;
    params.points.push_back({Complex(0.0), 3, {Complex(1.0), Complex(-1.0), Complex(1.0)}});
    const RationalMap r = recompose(params);
    const Poly want_num{Complex(0.0), Complex(1.0), Complex(-1.0)};
    const Poly want_den{Complex(1.0), Complex(-1.0), Complex(1.0)};
    if (testutil::coeff_distance(r.num, want_num) > 1e-10 ||
        testutil::coeff_distance(r.den, want_den) > 1e-10) {
        return "recompose did not return (-z^2+z)/(z^2-z+1)";
    }
    return {};
}

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<std::string()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"explicit conjugation family", 1.0, criterion_conjugation_family},
        {"pinned spectrum representatives", 5.0, criterion_spectrum_representatives},
        {"multiplier symmetric functions", 5.0, criterion_sigma_agreement},
        {"fixed point index sums", 30.0, criterion_index_sums},
        {"normalization across degrees", 120.0, criterion_normalize},
        {"coordinate round trips", 60.0, criterion_coordinate_round_trip},
        {"multiple point locus", 60.0, criterion_locus},
        {"stratum dimensions", 5.0, criterion_dimensions},
        {"singleton stratum", 5.0, criterion_singleton_stratum},
    };

    int failures = 0;
    int number = 0;
    for (const auto& c : criteria) {
        ++number;
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (detail.empty() && seconds > c.budget_seconds) {
            detail = "took " + std::to_string(seconds) + "s, budget " +
                     std::to_string(c.budget_seconds) + "s";
        }
        if (detail.empty()) {
            std::printf("[PASS] %d %s (%.2fs)\n", number, c.name, seconds);
        } else {
            ++failures;
            std::printf("[FAIL] %d %s (%.2fs): %s\n", number, c.name, seconds, detail.c_str());
        }
    }
    std::printf("%d/%d acceptance criteria passed\n",
                static_cast<int>(criteria.size()) - failures, static_cast<int>(criteria.size()));
    return failures == 0 ? 0 : 1;
}
