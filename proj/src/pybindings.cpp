#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ratmoduli/analysis.hpp"
#include "ratmoduli/json_io.hpp"
#include "ratmoduli/mapgen.hpp"

namespace py = pybind11;
using namespace ratmoduli;

namespace {

std::vector<Complex> coeffs_of(const Poly& p) {
    if (p.is_zero()) return {Complex(0.0, 0.0)};
    return p.coeffs();
}

RationalMap map_from_lists(const std::vector<Complex>& num, const std::vector<Complex>& den,
                           const Tolerances& tol) {
    RationalMap r{Poly(num), Poly(den)};
    validate_canonical(r, tol);
    return r;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Computations in the moduli space of rational maps of degree >= 2";

    py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
    auto numerical =
        py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<DegenerateConjugationError>(m, "DegenerateConjugationError",
                                                       numerical.ptr());

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def(py::init([](double root_refine, double cluster_radius, double zero_test) {
                 Tolerances t{root_refine, cluster_radius, zero_test};
                 t.validate();
                 return t;
             }),
             py::arg("root_refine") = Tolerances{}.root_refine,
             py::arg("cluster_radius") = Tolerances{}.cluster_radius,
             py::arg("zero_test") = Tolerances{}.zero_test)
        .def_readwrite("root_refine", &Tolerances::root_refine)
        .def_readwrite("cluster_radius", &Tolerances::cluster_radius)
        .def_readwrite("zero_test", &Tolerances::zero_test);

    py::class_<RationalMap>(m, "RationalMap")
        .def(py::init(&map_from_lists), py::arg("num"), py::arg("den"),
             py::arg("tol") = Tolerances{})
        .def_property_readonly("num", [](const RationalMap& r) { return coeffs_of(r.num); })
        .def_property_readonly("den", [](const RationalMap& r) { return coeffs_of(r.den); })
        .def_property_readonly("degree", &RationalMap::degree)
        .def("__call__", [](const RationalMap& r, Complex z) { return r(z); })
        .def("__repr__", [](const RationalMap& r) {
            return "<RationalMap degree " + std::to_string(r.degree()) + ">";
        });

    py::class_<MoebiusTransform>(m, "MoebiusTransform")
        .def(py::init([](Complex a, Complex b, Complex c, Complex d) {
                 return MoebiusTransform::make(a, b, c, d);
             }),
             py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
        .def_readonly("a", &MoebiusTransform::a)
        .def_readonly("b", &MoebiusTransform::b)
        .def_readonly("c", &MoebiusTransform::c)
        .def_readonly("d", &MoebiusTransform::d)
        .def("__call__",
             [](const MoebiusTransform& t, Complex z) {
                 SpherePoint image = apply(t, SpherePoint::at(z));
                 if (image.infinite) throw py::value_error("image is the point at infinity");
                 return image.value;
             })
        .def("inverse", [](const MoebiusTransform& t) { return inverse(t); })
        .def_static("identity", &MoebiusTransform::identity);

    m.def(
        "compose", [](const MoebiusTransform& s, const MoebiusTransform& t) { return compose(s, t); },
        py::arg("s"), py::arg("t"), "Composition s(t(z))");

    py::class_<FixedPoint>(m, "FixedPoint")
        .def_readonly("location", &FixedPoint::location)
        .def_readonly("multiplicity", &FixedPoint::multiplicity)
        .def_readonly("multiplier", &FixedPoint::multiplier)
        .def_property_readonly(
            "index",
            [](const FixedPoint& fp) -> py::object {
                if (!fp.index) return py::none();
                return py::cast(*fp.index);
            })
        .def("__repr__", [](const FixedPoint& fp) {
            return "<FixedPoint at (" + std::to_string(fp.location.real()) + "," +
                   std::to_string(fp.location.imag()) + ") multiplicity " +
                   std::to_string(fp.multiplicity) + ">";
        });

    py::class_<DecompositionPoint>(m, "DecompositionPoint")
        .def(py::init([](Complex zeta, int multiplicity, std::vector<Complex> alphas) {
                 return DecompositionPoint{zeta, multiplicity, std::move(alphas)};
             }),
             py::arg("zeta"), py::arg("multiplicity"), py::arg("alphas"))
        .def_readonly("zeta", &DecompositionPoint::zeta)
        .def_readonly("multiplicity", &DecompositionPoint::multiplicity)
        .def_readonly("alphas", &DecompositionPoint::alphas);

    py::class_<NormalizationTrace>(m, "NormalizationTrace")
        .def_readonly("result", &NormalizationTrace::result)
        .def_readonly("conjugator", &NormalizationTrace::conjugator)
        .def_readonly("chosen_fixed_point", &NormalizationTrace::chosen_fixed_point)
        .def_readonly("p", &NormalizationTrace::p)
        .def_readonly("q", &NormalizationTrace::q)
        .def_readonly("attempts", &NormalizationTrace::attempts);

    m.def(
        "canonicalize",
        [](const std::vector<Complex>& num, const std::vector<Complex>& den, const Tolerances& tol) {
            auto res = canonicalize(Poly(num), Poly(den), tol);
            return py::make_tuple(res.map, res.conjugator);
        },
        py::arg("num"), py::arg("den"), py::arg("tol") = Tolerances{},
        "Bring num/den (ascending coefficients) into canonical form; returns (map, conjugator)");

    m.def(
        "conjugate",
        [](const RationalMap& r, const MoebiusTransform& t, const Tolerances& tol) {
            return conjugate_map(r, t, tol);
        },
        py::arg("map"), py::arg("t"), py::arg("tol") = Tolerances{},
        "The map t^{-1} o R o t in canonical form");

    m.def(
        "fixed_points",
        [](const RationalMap& r, const Tolerances& tol) { return fixed_points(r, tol).points; },
        py::arg("map"), py::arg("tol") = Tolerances{});

    m.def(
        "fatou_sum", [](const RationalMap& r, const Tolerances& tol) { return fatou_sum(r, tol); },
        py::arg("map"), py::arg("tol") = Tolerances{},
        "Sum of fixed point indices 1/(1-m); equals 1 when all fixed points are simple");

    m.def(
        "multiplier_at", [](const RationalMap& r, Complex z) { return multiplier_at(r, z); },
        py::arg("map"), py::arg("z"));

    m.def(
        "normalize", [](const RationalMap& r, const Tolerances& tol) { return normalize(r, tol); },
        py::arg("map"), py::arg("tol") = Tolerances{},
        "Conjugate into the normalized family (constant numerator term 0, denominator ... - z + 1)");

    m.def(
        "is_normalized",
        [](const RationalMap& r, const Tolerances& tol) { return is_normalized(r, tol); },
        py::arg("map"), py::arg("tol") = Tolerances{});

    m.def(
        "overlap_type",
        [](const RationalMap& r, const Tolerances& tol) { return overlap_type(r, tol).parts; },
        py::arg("map"), py::arg("tol") = Tolerances{},
        "Fixed point multiplicities, sorted descending");

    m.def(
        "stratum_dims",
        [](const std::vector<int>& parts, int degree) {
            auto dims = stratum_dims(OverlapType{parts}, degree);
            return py::make_tuple(dims.locus_dim, dims.fiber_dim);
        },
        py::arg("parts"), py::arg("degree"),
        "(locus_dim, fiber_dim) = (d + p, d + 1 - p) for a type with p parts");

    m.def(
        "decompose",
        [](const RationalMap& r, const Tolerances& tol) { return decompose(r, tol).points; },
        py::arg("map"), py::arg("tol") = Tolerances{});

    m.def(
        "recompose",
        [](const std::vector<DecompositionPoint>& points, const Tolerances& tol) {
            return recompose(DecompositionParams{points}, tol);
        },
        py::arg("points"), py::arg("tol") = Tolerances{});

    m.def("locus_residual", &locus_residual, py::arg("map"));
    m.def("locus_residual_relative", &locus_residual_relative, py::arg("map"));

    m.def(
        "sigma_from_normalized",
        [](Complex a2, Complex a1, const Tolerances& tol) {
            SigmaD2 s = sigma_from_normalized(a2, a1, tol);
            return py::make_tuple(s.s1, s.s2, s.s3);
        },
        py::arg("a2"), py::arg("a1"), py::arg("tol") = Tolerances{},
        "Elementary symmetric functions of the multipliers of z(a2 z + a1)/(z^2 - z + 1)");

    m.def(
        "fatou_valid",
        [](Complex m1, Complex m2, Complex m3, const Tolerances& tol) {
            return fatou_valid(SpectrumD2{m1, m2, m3}, tol);
        },
        py::arg("m1"), py::arg("m2"), py::arg("m3"), py::arg("tol") = Tolerances{});

    m.def(
        "spectrum_to_normalized",
        [](Complex m1, Complex m2, Complex m3, const Tolerances& tol) {
            return spectrum_to_normalized(SpectrumD2{m1, m2, m3}, tol);
        },
        py::arg("m1"), py::arg("m2"), py::arg("m3"), py::arg("tol") = Tolerances{},
        "Normalized degree-2 map with the given multiplier spectrum");

    m.def(
        "roots_with_multiplicities",
        [](const std::vector<Complex>& coeffs, const Tolerances& tol) {
            std::vector<std::pair<Complex, int>> out;
            for (const auto& cluster : roots_with_multiplicities(Poly(coeffs), tol)) {
                out.emplace_back(cluster.value, cluster.multiplicity);
            }
            return out;
        },
        py::arg("coeffs"), py::arg("tol") = Tolerances{},
        "Roots of a polynomial (ascending coefficients) as (value, multiplicity) pairs");

    m.def(
        "resultant",
        [](const std::vector<Complex>& p, const std::vector<Complex>& q) {
            return resultant(Poly(p), Poly(q));
        },
        py::arg("p"), py::arg("q"));

    m.def(
        "discriminant",
        [](const std::vector<Complex>& p) { return discriminant(Poly(p)); }, py::arg("p"));

    py::class_<SplitMix64>(m, "SplitMix64")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next", &SplitMix64::next)
        .def("uniform", &SplitMix64::uniform)
        .def("unit_disk", &SplitMix64::unit_disk);

    m.def(
        "random_canonical_map",
        [](SplitMix64& rng, int degree, const Tolerances& tol) {
            return random_canonical_map(rng, degree, tol);
        },
        py::arg("rng"), py::arg("degree"), py::arg("tol") = Tolerances{});

    m.def(
        "analyze_json",
        [](const std::string& text, const Tolerances& tol, bool degree_check) {
            nlohmann::json parsed;
            try {
                parsed = nlohmann::json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
                throw InvalidInputError(std::string("JSON parse error: ") + e.what());
            }
            MapDocument doc = map_document_from_json(parsed);
            return analysis_to_json(analyze(doc, tol, degree_check)).dump(2);
        },
        py::arg("text"), py::arg("tol") = Tolerances{}, py::arg("degree_check") = false,
        "Full analysis of a JSON map document; returns the analysis document as JSON text");
}
