#pragma once

#include <nlohmann/json.hpp>

#include "covdbl/doubling.hpp"
#include "covdbl/lfactors.hpp"
#include "covdbl/matgroups.hpp"
#include "covdbl/wss.hpp"

namespace covdbl {

// Matrix coordinates in JSON are 1-based (row 1 is the first row); the
// in-memory structures are 0-based.

using Json = nlohmann::ordered_json;

Json to_json(const GroupSpec& g);
Json to_json(const ParabolicSpec& p);
Json to_json(const CharacterFunctional& psi);
Json to_json(const WssData& w);
Json to_json(const DoublingData& d);

GroupSpec group_from_json(const Json& j);
ParabolicSpec parabolic_from_json(const Json& j);
CharacterFunctional character_from_json(const Json& j);
WssData wss_from_json(const Json& j);

/// Rebuilds the structures from the stored fields; the result serializes
/// back to the same document. Throws std::invalid_argument on malformed or
/// inconsistent input.
DoublingData doubling_from_json(const Json& j);

/// {"numerator": ..., "denominator": ..., "alpha": ..., "degrees": {...}}
Json to_json(const RhsAssembly& rhs);

}  // namespace covdbl
