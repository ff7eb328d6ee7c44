#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "k3/doublesextic.hpp"
#include "k3/moduli.hpp"
#include "k3/quartics.hpp"
#include "k3/weierstrass.hpp"

// JSON views of the domain objects, keyed by the conventional symbol names.
// All rationals serialize as canonical "p/q" strings.

namespace k3 {

using nlohmann::json;

json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const json& j);

json to_json(const WeierstrassModel& m);
WeierstrassModel model_from_json(const json& j);

json to_json(const FiberConfig& cfg);

json to_json(const ModuliPoint& p);
ModuliPoint moduli_from_json(const json& j);

QuarticCoeffsP coeffsP_from_json(const json& j);
json to_json(const QuarticCoeffsP& c);
QuarticCoeffsPPrime coeffsPPrime_from_json(const json& j);
json to_json(const QuarticCoeffsPPrime& c);
VinbergCoeffs vinberg_from_json(const json& j);
json to_json(const VinbergCoeffs& c);
SexticConfig sextic_from_json(const json& j);
json to_json(const SexticConfig& c);

}  // namespace k3
