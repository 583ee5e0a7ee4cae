#pragma once

#include <string>

#include <json.hpp>

#include "ratmoduli/analysis.hpp"

namespace ratmoduli {

using Json = nlohmann::ordered_json;

// Complex numbers travel as [re, im]; a bare number is accepted as a real.
Json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j, const std::string& where);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j, const std::string& where);

// { "degree": d, "num": [[re,im],...], "den": [[re,im],...] }, coefficients
// ascending.  Parsing throws InvalidInputError with the offending field named.
Json map_document_to_json(const MapDocument& doc);
MapDocument map_document_from_json(const nlohmann::json& j);

Json analysis_to_json(const Analysis& a);

// Header re,im,multiplicity,mult_re,mult_im,index_re,index_im; one row per
// fixed point in the stored order; index columns empty for multiple points.
std::string fixed_points_csv(const FixedPointSet& fps);

} // namespace ratmoduli
