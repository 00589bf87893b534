#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "braidfoq/graded.hpp"
#include "braidfoq/transform.hpp"

namespace braidfoq {

using json = nlohmann::json;

/// Parses "3/2", "-ζ8^3", "1 + 2*ζ8^3", "z8^-1", "0.5+0.25i" into `field`.
Scalar parse_scalar(const std::string& text, const FieldSpec& field);

/// {"kind":"cyclo","order":N,"coeffs":[["p","q"],...]} or {"kind":"float","re":x,"im":y}.
json to_json(const Scalar& s);
/// Accepts the object form, a string for parse_scalar, or a number.
Scalar scalar_from_json(const json& j, const FieldSpec& field);

json to_json(const ScalarMatrix& m);
ScalarMatrix matrix_from_json(const json& j, const FieldSpec& field);

/// {"n","degrees","zeta","d","field","omega"}.
json to_json(const OmegaData& data);
OmegaData omega_from_json(const json& j);

json to_json(const ValidationReport& rep);
json to_json(const ReductionTrace& trace);

}  // namespace braidfoq
