#pragma once

#include <json.hpp>

#include "tic/hyperreal.hpp"

namespace tic {

using Json = nlohmann::ordered_json;

/// {"terms": [["p/q", "p/q"], ...], "order": K} with terms in increasing
/// exponent order. Symbolic coefficients are written in Scalar::str() form.
Json to_json(const HyperReal& h);

/// Inverse of to_json; also accepts decimal strings and bare JSON integers.
HyperReal hyperreal_from_json(const Json& j);

}  // namespace tic
