#pragma once

#include <json.hpp>

#include "turaev/linked_pairs.hpp"
#include "turaev/simplicity.hpp"
#include "turaev/sweep.hpp"

// JSON shapes of the machine interface. Stable field order and stable
// sorts throughout, so identical invocations serialize byte-identically.
//
//   linked pair set : [ {"i":..,"j":..,"type":1|2|3,"r":..,"sign":±1}, ... ]
//                     sorted by (i, j)
//   tensor element  : [ {"left":"..","right":"..","coeff":..}, ... ]
//                     sorted by (left, right) word strings
//   class report    : {"word":..,"primitive":..,"exponent":..,
//                      "linked_pairs":..,"self_intersection":..|null,
//                      "is_power_of_simple":..}

namespace turaev {

nlohmann::json to_json(const LinkedPairSet& lp);
nlohmann::json to_json(const TensorElement& x);
nlohmann::json to_json(const ClassReport& r);
nlohmann::json to_json(const NormIdentityReport& r);
nlohmann::json to_json(const VerifySummary& s);

}  // namespace turaev
