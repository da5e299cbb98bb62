#pragma once

#include "json.hpp"

#include "troman/bondage.hpp"
#include "troman/invariants.hpp"
#include "troman/reduction.hpp"

namespace troman {

using Json = nlohmann::ordered_json;

/// {"n", "gamma", "gamma_t", "gamma_R", "gamma_qtR", "gamma_tR", "beta",
///  "witnesses": {...}}
Json to_json(const InvariantReport& r);
/// {"kind":"finite","value":2,"witness":[[0,1],[0,2]]} or
/// {"kind":"infinite","certificate":[{"component":0,"class":"Cycle"}]}
Json to_json(const BondageResult& r);
/// b_tR is 1 or the string ">1".
Json to_json(const ClaimReport& r);

} // namespace troman
