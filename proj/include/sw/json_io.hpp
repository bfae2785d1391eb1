#pragma once

#include "sw/tame_types.hpp"
#include "sw/weight_sets.hpp"

#include "json.hpp"

#include <string>

namespace sw {

using Json = nlohmann::json;  // std::map backed, so keys come out sorted

Json context_json(const Context& ctx);
Context context_from_json(const Json& j);  // validates; throws InputError

// {"ctx": {...}, "rows": [[...], ...]}, always the canonical representative.
Json weight_json(const SerreWeight& a);
SerreWeight weight_from_json(const Json& j);

// {"ctx": {...}, "pieces": [{"niveau": d, "exponent": N}, ...]}. Exponents
// beyond 64 bits are written as decimal strings and accepted in either form.
Json type_json(const TameType& t);
TameType type_from_json(const Json& j);

// Weight sets inside a result carry only the rows; the context is the type's.
Json weight_set_json(const WeightSet& w);

// Parses text, turning JSON syntax errors into InputError.
Json parse_json_text(const std::string& text, const std::string& origin);

}  // namespace sw
