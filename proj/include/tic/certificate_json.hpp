#pragma once

#include "tic/hyperreal_json.hpp"
#include "tic/tracks.hpp"

namespace tic {

Json to_json(const Claim& c);
Json to_json(const Witness& w);
Json to_json(const LimitResult& r);
/// {"claim", "track", "outcome", "decision_grade", "witness", "modulus",
/// "narrative"} in that order; absent parts are null.
Json to_json(const Certificate& c);

}  // namespace tic
