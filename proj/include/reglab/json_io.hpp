#pragma once

// JSON encodings shared by the command-line tool and the harness. Exact
// numbers are strings ("p/q"); integers are accepted on input.

#include <json.hpp>

#include <string>

#include "reglab/projection.hpp"
#include "reglab/scheme.hpp"
#include "reglab/separation.hpp"

namespace reglab {

using Json = nlohmann::ordered_json;

/// "Q" or "fp:P".
Field parse_field_flag(const std::string& text);

Json field_to_json(Field f);
Field field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Field f);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, Field f);

/// {"field", "ambient", "germs": [{"point", "chart"?, "jet"?}]}
Json scheme_to_json(const FiniteScheme& x);
/// Reads the field from the document unless `override_field` is given.
FiniteScheme scheme_from_json(const Json& j, std::optional<Field> override_field = std::nullopt);

/// {"ambient", "forms": [[...], ...]} (cutting forms)
Json subspace_to_json(const LinearSubspace& l);
LinearSubspace subspace_from_json(const Json& j, Field f);

/// {"ambient", "degree", "forms"}
Json curve_to_json(const RationalCurve& c);
RationalCurve curve_from_json(const Json& j);

/// {"T_count", "T_forms"?, "spaces": {"j": [[coeff, [exps]], ...]}, "standard"}
FormSpaceRecipe recipe_from_json(const Json& j, Field f);
Json recipe_to_json(const FormSpaceRecipe& r);

/// {"n", "case", "a", "b", "u", "off_line"}
SeparatorConfig separator_from_json(const Json& j, Field f);
Json separator_to_json(const SeparatorConfig& c);

Json form_to_json(const Form& f);

}  // namespace reglab
