#pragma once

#include <vector>

#include <json.hpp>

#include "alphatree/bounds.hpp"
#include "alphatree/bst.hpp"
#include "alphatree/code_tree.hpp"
#include "alphatree/distribution.hpp"
#include "alphatree/feasibility.hpp"

namespace alphatree {

using Json = nlohmann::ordered_json;

/// {"num": "3", "den": "8"}; always in lowest terms.
Json rational_to_json(const Rational& r);
/// Accepts {"num","den"} (strings or integers), a string "3/8" / "0.375", or an
/// integer. Non-integer JSON numbers are rejected unless allow_float, in which
/// case the double is taken at its exact binary value.
Rational rational_from_json(const Json& j, bool allow_float = false);

struct ParsedProbabilities {
  std::vector<Rational> values;
  /// Float input was rescaled to sum to exactly 1.
  bool normalized = false;
};

/// Reads a probability array. Float input is accepted only with allow_float
/// and is rescaled when the sum is within 1e-12 of 1.
ParsedProbabilities probabilities_from_json(const Json& array, bool allow_float);

/// Leaves are {"leaf": s} with 1-based s, internal nodes {"left": ..., "right": ...}.
Json tree_to_json(const CodeTree& tree);
CodeTree tree_from_json(const Json& j);

/// q nodes {"q": i, "left": ..., "right": ...}, p leaves {"p": i}.
Json search_tree_to_json(const SearchTree& tree);
SearchTree search_tree_from_json(const Json& j);

Json lengths_to_json(const LengthList& lengths);
LengthList lengths_from_json(const Json& j);

Json bound_entry_to_json(const BoundEntry& e);
Json bounds_to_json(const BoundsReport& report);

}  // namespace alphatree
