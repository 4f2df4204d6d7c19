#pragma once

// JSON and CSV renderings of results. Counts are decimal strings, rationals
// are {"num", "den"} objects of decimal strings.

#include <string>

#include <json.hpp>

#include "cubeturan/bounds.hpp"
#include "cubeturan/constructions.hpp"
#include "cubeturan/counting.hpp"
#include "cubeturan/search.hpp"
#include "cubeturan/verification.hpp"

namespace cubeturan {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json count_json(const CountReport& r);
Json search_json(const SearchResult& r);
Json bound_json(const BoundValue& b);
Json sandwich_json(const SandwichReport& r);
Json verdict_json(const FreenessVerdict& v, const Pattern& forbidden);
// Sidecar written next to a constructed subgraph file.
Json construction_json(const Construction& c);
Json claims_json(const std::vector<ClaimCheck>& checks);
Json error_json(const std::string& kind, const std::string& message);

// Flattens an object (or an array of objects) into CSV with a header row.
// Nested values are written as compact JSON.
std::string to_csv(const Json& j);

}  // namespace cubeturan
