#include "alphatree/json_io.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "alphatree/errors.hpp"

namespace alphatree {

namespace {

constexpr double kFloatSumTolerance = 1e-12;

BigNat bignat_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigNat(j.get<std::uint64_t>()) : BigNat(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty()) throw InvalidInput("empty integer string");
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) throw InvalidInput("malformed integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InvalidInput("malformed integer '" + s + "'");
    }
    return BigNat(s);
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

// Exact value of a finite double.
Rational exact_double(double x) {
  if (!std::isfinite(x)) throw InvalidInput("probabilities must be finite");
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // Scale the mantissa to a 53-bit integer.
  auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, std::numeric_limits<double>::digits));
  exponent -= std::numeric_limits<double>::digits;
  Rational r(scaled);
  return exponent >= 0 ? r / pow2_neg(exponent) : r * pow2_neg(-exponent);
}

std::size_t index_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw InvalidInput(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

Json rational_to_json(const Rational& r) {
  Json j;
  j["num"] = boost::multiprecision::numerator(r).str();
  j["den"] = boost::multiprecision::denominator(r).str();
  return j;
}

Rational rational_from_json(const Json& j, bool allow_float) {
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den")) {
      throw InvalidInput("rational objects need 'num' and 'den'");
    }
    return make_rational(bignat_from_json(j["num"]), bignat_from_json(j["den"]));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(bignat_from_json(j));
  if (j.is_number_float()) {
    if (!allow_float) {
      throw InvalidInput("floating-point value " + j.dump() +
                         " needs --float (or pass an exact string such as \"1/3\")");
    }
    return exact_double(j.get<double>());
  }
  throw InvalidInput("expected a rational, got " + j.dump());
}

ParsedProbabilities probabilities_from_json(const Json& array, bool allow_float) {
  if (!array.is_array()) throw InvalidInput("expected an array of probabilities");
  ParsedProbabilities out;
  bool any_float = false;
  for (const auto& v : array) {
    any_float = any_float || v.is_number_float();
    out.values.push_back(rational_from_json(v, allow_float));
  }
  if (any_float) {
    Rational total = 0;
    for (const auto& v : out.values) total += v;
    if (total != 1) {
      if (std::abs(to_double(total) - 1.0) > kFloatSumTolerance) {
        throw InvalidInput("probabilities sum to " + std::to_string(to_double(total)) +
                           ", outside the 1e-12 normalization tolerance");
      }
      for (auto& v : out.values) v /= total;
      out.normalized = true;
    }
  }
  return out;
}

Json tree_to_json(const CodeTree& tree) {
  if (tree.empty()) return Json();
  // Post-order assembly with an explicit stack.
  std::vector<Json> built(tree.node_count());
  std::vector<std::pair<CodeTree::NodeId, bool>> stack{{tree.root(), false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const auto& n = tree.node(id);
    if (n.is_leaf()) {
      built[id] = Json{{"leaf", n.symbol + 1}};
      continue;
    }
    if (!expanded) {
      stack.emplace_back(id, true);
      if (n.right != CodeTree::kNone) stack.emplace_back(n.right, false);
      if (n.left != CodeTree::kNone) stack.emplace_back(n.left, false);
      continue;
    }
    Json node;
    node["left"] = n.left == CodeTree::kNone ? Json() : std::move(built[n.left]);
    node["right"] = n.right == CodeTree::kNone ? Json() : std::move(built[n.right]);
    built[id] = std::move(node);
  }
  return std::move(built[tree.root()]);
}

CodeTree tree_from_json(const Json& j) {
  CodeTree tree;
  struct Task {
    const Json* node;
    CodeTree::NodeId parent;
    bool right;
  };
  std::vector<Task> stack{{&j, CodeTree::kNone, false}};
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    const Json& n = *t.node;
    if (!n.is_object()) throw InvalidInput("tree nodes must be objects");
    CodeTree::NodeId id;
    if (n.contains("leaf")) {
      std::size_t s = index_field(n, "leaf");
      if (s == 0) throw InvalidInput("leaf symbols are 1-based");
      id = tree.add_leaf(s - 1);
    } else if (n.contains("left") && n.contains("right")) {
      id = tree.add_internal(CodeTree::kNone, CodeTree::kNone);
      stack.push_back({&n["right"], id, true});
      stack.push_back({&n["left"], id, false});
    } else {
      throw InvalidInput("tree node needs 'leaf' or both 'left' and 'right'");
    }
    if (t.parent == CodeTree::kNone) {
      tree.set_root(id);
    } else {
      tree.set_child(t.parent, t.right, id);
    }
  }
  return tree;
}

Json search_tree_to_json(const SearchTree& tree) {
  if (tree.empty()) return Json();
  std::vector<Json> built(tree.node_count());
  std::vector<std::pair<SearchTree::NodeId, bool>> stack{{tree.root(), false}};
  auto store = [&](SearchTree::NodeId id, Json value) {
    built[static_cast<std::size_t>(id)] = std::move(value);
  };
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const auto& n = tree.node(id);
    if (n.kind == SearchTree::Kind::kP) {
      store(id, Json{{"p", n.index}});
      continue;
    }
    if (!expanded) {
      stack.emplace_back(id, true);
      if (n.right != SearchTree::kNone) stack.emplace_back(n.right, false);
      if (n.left != SearchTree::kNone) stack.emplace_back(n.left, false);
      continue;
    }
    Json node;
    node["q"] = n.index;
    node["left"] = n.left == SearchTree::kNone ? Json() : std::move(built[n.left]);
    node["right"] = n.right == SearchTree::kNone ? Json() : std::move(built[n.right]);
    store(id, std::move(node));
  }
  return std::move(built[static_cast<std::size_t>(tree.root())]);
}

SearchTree search_tree_from_json(const Json& j) {
  SearchTree tree;
  struct Task {
    const Json* node;
    SearchTree::NodeId parent;
    bool right;
  };
  std::vector<Task> stack{{&j, SearchTree::kNone, false}};
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.node->is_null()) continue;
    const Json& n = *t.node;
    if (!n.is_object()) throw InvalidInput("search tree nodes must be objects");
    SearchTree::NodeId id;
    if (n.contains("p")) {
      id = tree.add_p_leaf(index_field(n, "p"));
    } else if (n.contains("q")) {
      id = tree.add_q_node(index_field(n, "q"), SearchTree::kNone, SearchTree::kNone);
      if (n.contains("right")) stack.push_back({&n["right"], id, true});
      if (n.contains("left")) stack.push_back({&n["left"], id, false});
    } else {
      throw InvalidInput("search tree node needs 'p' or 'q'");
    }
    if (t.parent == SearchTree::kNone) {
      tree.set_root(id);
    } else {
      tree.set_child(t.parent, t.right, id);
    }
  }
  return tree;
}

Json lengths_to_json(const LengthList& lengths) {
  Json j = Json::array();
  for (Length l : lengths.values()) j.push_back(l);
  return j;
}

LengthList lengths_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of lengths");
  std::vector<Length> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1 ||
        v.get<std::int64_t>() > std::numeric_limits<Length>::max()) {
      throw InvalidInput("lengths must be positive integers, got " + v.dump());
    }
    out.push_back(v.get<Length>());
  }
  return LengthList(std::move(out));
}

Json bound_entry_to_json(const BoundEntry& e) {
  Json j;
  j["id"] = e.id;
  j["formula"] = e.label;
  j["applicable"] = e.applicable;
  j["value"] = e.applicable ? Json(e.value) : Json();
  j["holds"] = e.holds;
  j["upper_bound"] = e.upper_bound;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

Json bounds_to_json(const BoundsReport& report) {
  Json j;
  j["entropy"] = report.entropy;
  if (report.exact_entropy) j["entropy_exact"] = rational_to_json(*report.exact_entropy);
  j["bounds"] = Json::array();
  for (const auto& e : report.entries) j["bounds"].push_back(bound_entry_to_json(e));
  return j;
}

}  // namespace alphatree
