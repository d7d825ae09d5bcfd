#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "deltatop/covers.hpp"
#include "deltatop/finite_space.hpp"
#include "deltatop/maps.hpp"

namespace deltatop {

using Json = nlohmann::ordered_json;

/// A set is an array of point labels, in point order.
Json set_to_json(const FinSpace& s, const PtSet& a);
PtSet set_from_json(const FinSpace& s, const Json& j);

/// A family is an array of sets. Output families are sorted by cardinality then
/// lexicographically unless `keep_order` is set (covers, where order breaks ties).
Json family_to_json(const FinSpace& s, const SetFamily& f, bool keep_order = false);
SetFamily family_from_json(const FinSpace& s, const Json& j);

/// {"points": [...], "opens": [[...], ...]}
Json space_to_json(const FinSpace& s);
FinSpace space_from_json(const Json& j);

Json profile_to_json(const SeparationProfile& p);
SeparationProfile profile_from_json(const Json& j);

/// {"dom": <space>, "cod": <space>, "table": {"a": "b", ...}}
Json map_to_json(const SpaceMap& f);
SpaceMap map_from_json(const Json& j);

/// {"space": <space>, "target": [...], "family": [[...], ...], "mode": "delta_open"}
Json cover_to_json(const Cover& c);
Cover cover_from_json(const Json& j);

/// Parses JSON text; syntax errors become ParseError carrying the byte offset.
Json parse_json(const std::string& text);

}  // namespace deltatop
