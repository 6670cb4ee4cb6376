#pragma once

// JSON forms of engine values. Objects use sorted keys, so identical values
// always serialize to identical bytes.

#include <nlohmann/json.hpp>

#include "motive_forge/cellular.hpp"
#include "motive_forge/config.hpp"
#include "motive_forge/filtration.hpp"
#include "motive_forge/kvar.hpp"
#include "motive_forge/tateexpr.hpp"
#include "motive_forge/wonderful.hpp"

namespace motive_forge::io {

using nlohmann::json;

/// [{atom, p, q, mult}, ...]; atom is "UNIT" or the opaque name.
json to_json(const TateExpr& e);
json to_json(const TateLedger& e);
/// {"<monomial>": coeff, ...}
json to_json(const K0Class& c);
json to_json(const CellularVariety& x);
json to_json(const TriangleRecord& t);
json to_json(const FiltrationTree& tree);
json to_json(const MixedTateCertificate& cert);
json subset_json(std::uint32_t mask);

TateExpr tate_from_json(const json& j);
/// Accepts a Lefschetz/K0 string ("1 + L", "M(X)") or a term list.
TateExpr class_from_json(const json& j);
/// {components:[{name, class, dim}], intersections:[{subset:[i..], class|"empty", dim}]}
Configuration config_from_json(const json& j);
json to_json(const Configuration& c);

}  // namespace motive_forge::io
