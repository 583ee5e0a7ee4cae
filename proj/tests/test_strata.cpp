#include <doctest.h>

#include "helpers.hpp"
#include "ratmoduli/strata.hpp"

using namespace ratmoduli;
using testutil::close;

namespace {

RationalMap cusp_cubic() {
    return {Poly{Complex(0.0), Complex(-2.0), Complex(-4.0), Complex(-3.0)},
            Poly{Complex(-1.0), Complex(-1.0), Complex(0.0), Complex(1.0)}};
}

RationalMap squaring_canonical() {
    return {Poly{Complex(0.0), Complex(0.0), Complex(0.5)},
            Poly{Complex(0.5), Complex(-1.0), Complex(1.0)}};
}

// (-z^2 + z) / (z^2 - z + 1): single fixed point of multiplicity 3 at the origin.
RationalMap triple_point_quadratic() {
    return {Poly{Complex(0.0), Complex(1.0), Complex(-1.0)},
            Poly{Complex(1.0), Complex(-1.0), Complex(1.0)}};
}

// fixed point polynomial (z-1)^2 (z+1)^2 with denominator z^3 + 2
RationalMap two_double_points() {
    return {Poly{Complex(-1.0), Complex(2.0), Complex(2.0)},
            Poly{Complex(2.0), Complex(0.0), Complex(0.0), Complex(1.0)}};
}

} // namespace

TEST_CASE("overlap_type collects multiplicities in decreasing order") {
    CHECK(overlap_type(cusp_cubic()) == OverlapType{{3, 1}});
    CHECK(overlap_type(squaring_canonical()) == OverlapType{{1, 1, 1}});
    CHECK(overlap_type(triple_point_quadratic()) == OverlapType{{3}});
    CHECK(overlap_type(two_double_points()) == OverlapType{{2, 2}});
    CHECK(overlap_type(cusp_cubic()).total() == 4);
}

TEST_CASE("decompose reads off the partial fraction coefficients") {
    const auto params = decompose(cusp_cubic());
    REQUIRE(params.points.size() == 2);

    CHECK(close(params.points[0].zeta, Complex(-1.0), 1e-8));
    CHECK(params.points[0].multiplicity == 3);
    REQUIRE(params.points[0].alphas.size() == 3);
    CHECK(close(params.points[0].alphas[0], Complex(2.0), 1e-10));
    CHECK(close(params.points[0].alphas[1], Complex(-1.0), 1e-10));
    CHECK(close(params.points[0].alphas[2], Complex(1.0), 1e-10));

    CHECK(close(params.points[1].zeta, Complex(0.0), 1e-10));
    CHECK(params.points[1].multiplicity == 1);
    REQUIRE(params.points[1].alphas.size() == 1);
    CHECK(close(params.points[1].alphas[0], Complex(-1.0), 1e-10));
}

TEST_CASE("first order coefficients sum to one") {
    for (const auto& r : {cusp_cubic(), squaring_canonical(), two_double_points()}) {
        Complex sum(0.0);
        for (const auto& pt : decompose(r).points) sum += pt.alphas[0];
        CHECK(close(sum, Complex(1.0), 1e-10));
    }
}

TEST_CASE("recompose inverts decompose") {
    for (const auto& r : {cusp_cubic(), squaring_canonical(), two_double_points()}) {
        const RationalMap back = recompose(decompose(r));
        CHECK(testutil::map_distance(back, r) < 1e-10);
    }
}

TEST_CASE("decompose inverts recompose") {
    DecompositionParams params;
    params.points.push_back({Complex(1.0), 2, {Complex(0.75), Complex(0.5, 0.25)}});
    params.points.push_back({Complex(0.0, -1.0), 1, {Complex(0.25)}});
    const RationalMap r = recompose(params);
    const auto again = decompose(r);
    REQUIRE(again.points.size() == 2);
    // lexicographic order puts zeta = -i first
    CHECK(close(again.points[0].zeta, Complex(0.0, -1.0), 1e-8));
    CHECK(close(again.points[0].alphas[0], Complex(0.25), 1e-9));
    CHECK(close(again.points[1].zeta, Complex(1.0), 1e-8));
    CHECK(close(again.points[1].alphas[0], Complex(0.75), 1e-9));
    CHECK(close(again.points[1].alphas[1], Complex(0.5, 0.25), 1e-9));
}

TEST_CASE("the singleton stratum in degree two has one member") {
    DecompositionParams params;
    params.points.push_back({Complex(0.0), 3, {Complex(1.0), Complex(-1.0), Complex(1.0)}});
    const RationalMap r = recompose(params);
    CHECK(testutil::map_distance(r, triple_point_quadratic()) < 1e-12);
}

TEST_CASE("recompose validates its input") {
    // first order coefficients must sum to one
    DecompositionParams bad_sum;
    bad_sum.points.push_back({Complex(0.0), 1, {Complex(0.5)}});
    bad_sum.points.push_back({Complex(1.0), 1, {Complex(0.4)}});
    CHECK_THROWS_AS(recompose(bad_sum), InvalidInputError);

    // the top coefficient of each point must be nonzero
    DecompositionParams bad_top;
    bad_top.points.push_back({Complex(0.0), 2, {Complex(1.0), Complex(0.0)}});
    CHECK_THROWS_AS(recompose(bad_top), InvalidInputError);

    // fixed points must be distinct
    DecompositionParams dup;
    dup.points.push_back({Complex(1.0), 1, {Complex(0.5)}});
    dup.points.push_back({Complex(1.0), 1, {Complex(0.5)}});
    CHECK_THROWS_AS(recompose(dup), InvalidInputError);

    // multiplicities are positive and alphas has one entry per order
    DecompositionParams bad_mult;
    bad_mult.points.push_back({Complex(0.0), 0, {}});
    CHECK_THROWS_AS(recompose(bad_mult), InvalidInputError);

    DecompositionParams bad_size;
    bad_size.points.push_back({Complex(0.0), 2, {Complex(1.0)}});
    CHECK_THROWS_AS(recompose(bad_size), InvalidInputError);
}

TEST_CASE("stratum_dims splits 2d+1 between locus and fiber") {
    CHECK(stratum_dims(OverlapType{{3, 1}}, 3).locus_dim == 5);
    CHECK(stratum_dims(OverlapType{{3, 1}}, 3).fiber_dim == 2);
    CHECK(stratum_dims(OverlapType{{4}}, 3).locus_dim == 4);
    CHECK(stratum_dims(OverlapType{{4}}, 3).fiber_dim == 3);
    CHECK(stratum_dims(OverlapType{{1, 1, 1, 1}}, 3).locus_dim == 7);
    CHECK(stratum_dims(OverlapType{{1, 1, 1, 1}}, 3).fiber_dim == 0);
    CHECK(stratum_dims(OverlapType{{2, 1}}, 2).locus_dim == 4);
    CHECK(stratum_dims(OverlapType{{2, 1}}, 2).fiber_dim == 1);

    for (int d = 2; d <= 6; ++d) {
        const OverlapType simple{std::vector<int>(static_cast<std::size_t>(d) + 1, 1)};
        const auto dims = stratum_dims(simple, d);
        CHECK(dims.locus_dim + dims.fiber_dim == 2 * d + 1);
    }
}

TEST_CASE("stratum_dims rejects partitions of the wrong total") {
    CHECK_THROWS_AS(stratum_dims(OverlapType{{3}}, 3), InvalidInputError);
    CHECK_THROWS_AS(stratum_dims(OverlapType{{2, 2}}, 2), InvalidInputError);
    CHECK_THROWS_AS(stratum_dims(OverlapType{{0, 4}}, 3), InvalidInputError);
}

TEST_CASE("degree two locus polynomial equals the fixed point discriminant") {
    const RationalMap r{Poly{Complex(0.2), Complex(0.7), Complex(0.3, 0.1)},
                        Poly{Complex(0.5, -0.2), Complex(-1.1), Complex(1.0)}};
    CHECK_NOTHROW(validate_canonical(r));
    const Complex disc = discriminant(fixed_point_polynomial(r));
    CHECK(close(locus_residual(r), disc, 1e-12 * std::abs(disc)));
}

TEST_CASE("degree three locus polynomial equals minus the fixed point discriminant") {
    const RationalMap r{Poly{Complex(0.1), Complex(-0.4), Complex(0.2, 0.3), Complex(0.9)},
                        Poly{Complex(-0.3, 0.1), Complex(0.8), Complex(-0.2), Complex(1.0)}};
    CHECK_NOTHROW(validate_canonical(r));
    const Complex disc = discriminant(fixed_point_polynomial(r));
    CHECK(close(locus_residual(r), -disc, 1e-12 * std::abs(disc)));
}

TEST_CASE("locus residual vanishes exactly on maps with a multiple fixed point") {
    CHECK(locus_residual_relative(cusp_cubic()) < 1e-10);
    CHECK(locus_residual_relative(triple_point_quadratic()) < 1e-10);
    CHECK(locus_residual_relative(two_double_points()) < 1e-10);

    CHECK(locus_residual_relative(squaring_canonical()) > 1e-6);
}
