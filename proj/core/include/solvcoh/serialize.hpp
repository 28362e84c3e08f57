#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "solvcoh/model.hpp"

namespace solvcoh {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// [num, den]; integers that do not fit in 64 bits are written as strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
/// [re_num, re_den, im_num, im_den]
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {label: exponent, ...}
Json character_to_json(const Character& chi, const std::vector<std::string>& labels);
Character character_from_json(const Json& j, const std::vector<std::string>& labels);

/// List of {coeff, character, holo, anti} terms.
Json element_to_json(const Element& e, const std::vector<std::string>& char_labels);
Element element_from_json(const Json& j, int n, const std::vector<std::string>& char_labels);

Json model_to_json(const ModelData& m);
/// Throws ModelError(ParseError) on malformed input.
ModelData model_data_from_json(const Json& j);

/// Parse and validate. Throws ModelError.
ManifoldModel load_model(std::string_view text);
ManifoldModel load_model_file(const std::string& path);
std::string dump_model(const ModelData& m);

/// Parses JSON text, mapping syntax errors to ModelError(ParseError).
Json parse_json(std::string_view text);

}  // namespace solvcoh
