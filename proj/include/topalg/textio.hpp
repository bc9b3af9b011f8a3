#pragma once

// JSON serialization of spaces and linear combinations, plus the DOT
// rendering of the Hasse diagram of a space's quotient poset.

#include <string>

#include <json.hpp>

#include "topalg/lincomb.hpp"
#include "topalg/preorder.hpp"

namespace topalg {

// {"elements": ["a", ...], "relations": [["a","b"], ...]}
// Relations are the strict pairs, sorted; closure is re-applied on read.
nlohmann::ordered_json preorder_to_json(const Preorder& t);
Preorder preorder_from_json(const nlohmann::json& j);  // ParseError on shape

// {"rank": r, "terms": [{"coeff": "...", "factors": [...]}]}
nlohmann::ordered_json lincomb_to_json(const LinComb& a);

// Hasse diagram of the quotient poset: one boxed node per equivalence class
// (labels comma-joined), edges are covering relations, minima at the bottom.
std::string render_dot(const Preorder& t);

}  // namespace topalg
