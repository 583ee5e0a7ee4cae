#include "ratmoduli/json_io.hpp"

#include <algorithm>
#include <cstdio>

#include "ratmoduli/errors.hpp"

namespace ratmoduli {

static double drop_negative_zero(double x) { return x == 0.0 ? 0.0 : x; }

Json complex_to_json(Complex z) {
    return Json::array({drop_negative_zero(z.real()), drop_negative_zero(z.imag())});
}

Complex complex_from_json(const nlohmann::json& j, const std::string& where) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return Complex(j[0].get<double>(), j[1].get<double>());
    }
    throw InvalidInputError(where + ": expected [re, im] or a number, got " + j.dump());
}

Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(complex_to_json(p.coeff(k)));
    if (p.degree() < 0) arr.push_back(complex_to_json(Complex(0.0, 0.0)));
    return arr;
}

Poly poly_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) {
        throw InvalidInputError(where + ": expected a nonempty coefficient array");
    }
    std::vector<Complex> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        coeffs.push_back(complex_from_json(j[k], where + "[" + std::to_string(k) + "]"));
    }
    return Poly(std::move(coeffs));
}

Json map_document_to_json(const MapDocument& doc) {
    Json j;
    j["degree"] = doc.degree;
    j["num"] = poly_to_json(doc.num);
    j["den"] = poly_to_json(doc.den);
    return j;
}

MapDocument map_document_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidInputError("map document: expected a JSON object");
    if (!j.contains("num")) throw InvalidInputError("map document: missing \"num\"");
    if (!j.contains("den")) throw InvalidInputError("map document: missing \"den\"");
    MapDocument doc;
    doc.num = poly_from_json(j.at("num"), "num");
    doc.den = poly_from_json(j.at("den"), "den");
    if (j.contains("degree")) {
        if (!j.at("degree").is_number_integer()) {
            throw InvalidInputError("degree: expected an integer");
        }
        doc.degree = j.at("degree").get<int>();
    } else {
        doc.degree = std::max(doc.num.degree(), doc.den.degree());
    }
    return doc;
}

static Json map_json(const RationalMap& r) {
    Json j;
    j["num"] = poly_to_json(r.num);
    j["den"] = poly_to_json(r.den);
    return j;
}

static Json moebius_json(const MoebiusTransform& t) {
    Json j;
    j["a"] = complex_to_json(t.a);
    j["b"] = complex_to_json(t.b);
    j["c"] = complex_to_json(t.c);
    j["d"] = complex_to_json(t.d);
    return j;
}

Json analysis_to_json(const Analysis& a) {
    Json j;
    j["degree"] = a.canonical.degree();
    j["canonical"] = map_json(a.canonical);
    j["overlap_type"] = a.type.parts;
    Json dims;
    dims["locus_dim"] = a.dims.locus_dim;
    dims["fiber_dim"] = a.dims.fiber_dim;
    j["stratum"] = dims;

    Json fps = Json::array();
    for (const auto& fp : a.fixed.points) {
        Json f;
        f["location"] = complex_to_json(fp.location);
        f["multiplicity"] = fp.multiplicity;
        f["multiplier"] = complex_to_json(fp.multiplier);
        f["index"] = fp.index ? complex_to_json(*fp.index) : Json(nullptr);
        fps.push_back(std::move(f));
    }
    j["fixed_points"] = std::move(fps);

    Json dec = Json::array();
    for (const auto& pt : a.decomposition.points) {
        Json d;
        d["zeta"] = complex_to_json(pt.zeta);
        d["multiplicity"] = pt.multiplicity;
        Json alphas = Json::array();
        for (Complex alpha : pt.alphas) alphas.push_back(complex_to_json(alpha));
        d["alphas"] = std::move(alphas);
        dec.push_back(std::move(d));
    }
    j["decomposition"] = std::move(dec);

    j["normalized"] = map_json(a.trace.result);
    Json norm;
    norm["fixed_point"] = complex_to_json(a.trace.chosen_fixed_point);
    norm["p"] = complex_to_json(a.trace.p);
    norm["q"] = complex_to_json(a.trace.q);
    norm["attempts"] = a.trace.attempts;
    j["normalization"] = std::move(norm);
    j["conjugator"] = moebius_json(a.total_conjugator);

    if (a.sigma) {
        Json s;
        s["sigma1"] = complex_to_json(a.sigma->s1);
        s["sigma2"] = complex_to_json(a.sigma->s2);
        s["sigma3"] = complex_to_json(a.sigma->s3);
        j["sigma"] = std::move(s);
    }

    j["locus_residual"] = complex_to_json(a.locus_value);
    j["locus_residual_relative"] = a.locus_relative;
    return j;
}

static void append_double(std::string& out, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", drop_negative_zero(x));
    out += buf;
}

std::string fixed_points_csv(const FixedPointSet& fps) {
    std::string out = "re,im,multiplicity,mult_re,mult_im,index_re,index_im\n";
    for (const auto& fp : fps.points) {
        append_double(out, fp.location.real());
        out += ',';
        append_double(out, fp.location.imag());
        out += ',';
        out += std::to_string(fp.multiplicity);
        out += ',';
        append_double(out, fp.multiplier.real());
        out += ',';
        append_double(out, fp.multiplier.imag());
        out += ',';
        if (fp.index) {
            append_double(out, fp.index->real());
            out += ',';
            append_double(out, fp.index->imag());
        } else {
            out += ',';
        }
        out += '\n';
    }
    return out;
}

} // namespace ratmoduli
