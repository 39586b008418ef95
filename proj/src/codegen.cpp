#include "alphatree/codegen.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "alphatree/bounds.hpp"
#include "alphatree/errors.hpp"

namespace alphatree {

namespace {

Length ceil_length(const Rational& p) {
  std::int64_t c = ceil_neg_log2(p);
  if (c < 0 || c > std::numeric_limits<Length>::max() - 3) {
    throw InvalidInput("probability " + to_string(p) + " out of range");
  }
  return static_cast<Length>(c);
}

bool is_endpoint(std::size_t i, std::size_t m) { return i == 0 || i + 1 == m; }

// Per-symbol lengths before interleaving: ceil(-log2 p) at the endpoints,
// one more bit inside, 0 for zero-probability symbols.
std::vector<Length> symbol_lengths(const ProbDist& phi) {
  std::vector<Length> lengths(phi.size(), 0);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] == 0) continue;
    lengths[i] = ceil_length(phi[i]) + (is_endpoint(i, phi.size()) ? 0 : 1);
  }
  return lengths;
}

Length max_ceil(const ProbDist& phi) {
  Length best = 0;
  for (const auto& p : phi.values()) {
    if (p > 0) best = std::max(best, ceil_length(p));
  }
  return best;
}

void require_positive_ends(const ProbDist& phi) {
  if (phi.size() < 2) throw InvalidInput("need at least two symbols");
  if (phi.front() == 0 || phi.back() == 0) {
    throw InvalidInput("first and last probability must be nonzero");
  }
}

// Upper bound on sum(L, 2m-1) for the interleaved list once every filler is
// k >= max length: endpoints once, interior symbols twice, zero symbols as
// two fillers each.
struct FillerBudget {
  Rational fixed = 0;
  std::size_t zeros = 0;

  bool fits(Length k) const { return fixed + Rational(2 * zeros) * pow2_neg(k) < 1; }
};

FillerBudget filler_budget(std::span<const Length> lengths) {
  FillerBudget budget;
  const std::size_t m = lengths.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (lengths[i] == 0) {
      ++budget.zeros;
    } else {
      budget.fixed += Rational(is_endpoint(i, m) ? 1 : 2) * pow2_neg(lengths[i]);
    }
  }
  return budget;
}

Length smallest_filler(std::span<const Length> lengths, Length floor) {
  const FillerBudget budget = filler_budget(lengths);
  if (budget.fixed >= 1) throw InvalidInput("no filler length exists: the lengths leave no slack");
  if (budget.fits(floor)) return floor;
  Length step = 1;
  while (!budget.fits(floor + step)) step *= 2;
  Length lo = floor + step / 2;  // fails
  Length hi = floor + step;      // fits
  if (step == 1) lo = floor;
  while (hi - lo > 1) {
    Length mid = lo + (hi - lo) / 2;
    (budget.fits(mid) ? hi : lo) = mid;
  }
  return hi;
}

LengthList interleave(std::span<const Length> lengths, Length k) {
  std::vector<Length> out;
  out.reserve(2 * lengths.size() - 1);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i > 0) out.push_back(k);
    out.push_back(lengths[i] == 0 ? k : lengths[i]);
  }
  return LengthList(std::move(out));
}

// Interleaves fillers, builds the tree over the extension and prunes them.
CodeTree interleaved_tree(const ProbDist& phi, std::span<const Length> lengths, Length floor) {
  const Length k = smallest_filler(lengths, floor);
  const LengthList extended = interleave(lengths, k);
  if (!is_feasible(extended)) throw ContractViolation("interleaved lengths are infeasible");
  return prune_nulls(construct_tree(extended), ExtendedDist::partial(phi));
}

CodeTree::NodeId add_comb(CodeTree& tree, std::size_t first, std::size_t last, bool left) {
  if (left) {
    CodeTree::NodeId node = tree.add_leaf(first);
    for (std::size_t s = first + 1; s <= last; ++s) node = tree.add_internal(node, tree.add_leaf(s));
    return node;
  }
  CodeTree::NodeId node = tree.add_leaf(last);
  for (std::size_t s = last; s-- > first;) node = tree.add_internal(tree.add_leaf(s), node);
  return node;
}

Rational tree_cost(const CodeTree& tree, const ProbDist& phi) {
  auto depth = tree.depths();
  Rational cost = 0;
  for (std::size_t i = 0; i < depth.size(); ++i) cost += phi[i] * depth[i];
  return cost;
}

struct CoreBuild {
  CodeTree tree;
  Route route = Route::kSingle;
  std::string bound_id;
  double bound = 0;
};

// Picks the smallest applicable bound among ids.
void report_tightest(CoreBuild& build, const BoundsReport& report,
                     std::initializer_list<const char*> ids) {
  bool found = false;
  for (const char* id : ids) {
    const BoundEntry* e = report.find(id);
    if (e == nullptr || !e->applicable) continue;
    if (!found || e->value < build.bound) {
      build.bound = e->value;
      build.bound_id = e->id;
      found = true;
    }
  }
}

// phi has nonzero endpoints and m >= 2.
CoreBuild build_core(const ProbDist& phi) {
  const std::size_t m = phi.size();
  CoreBuild build;
  const BoundsReport report = alphabetic_bounds(phi);

  if (!is_dyadic(phi)) {
    build.tree = interleaved_tree(phi, symbol_lengths(phi), max_ceil(phi) + 2);
    build.route = Route::kInterleaved;
    report_tightest(build, report, {"interleaved", "endpoint-refined", "bump-sets"});
    return build;
  }

  if (phi.all_positive()) {
    build.tree = construct_tree(dyadic_lengths(phi));
    build.route = Route::kDyadic;
    if (m >= 4) {
      const LengthList limit = dyadic_limit_lengths(phi);
      const Length floor = std::max<Length>(max_ceil(phi) + 2, limit.max());
      CodeTree alt = interleaved_tree(phi, limit.values(), floor);
      if (tree_cost(alt, phi) < tree_cost(build.tree, phi)) {
        build.tree = std::move(alt);
        build.route = Route::kDyadicPerturbed;
      }
    }
    report_tightest(build, report, {"dyadic", "dyadic-perturbed", "endpoint-refined"});
    return build;
  }

  // Dyadic with zeros inside: lower the first nonzero interior probability
  // (or phi_1 when there is none) by an infinitesimal amount, which costs it
  // one extra bit, and code the now non-dyadic distribution.
  std::vector<Length> lengths = symbol_lengths(phi);
  std::size_t lowered = 0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (phi[i] > 0) {
      lowered = i;
      break;
    }
  }
  ++lengths[lowered];
  const Length floor =
      std::max<Length>(max_ceil(phi) + 2, *std::max_element(lengths.begin(), lengths.end()));
  build.tree = interleaved_tree(phi, lengths, floor);
  build.route = Route::kDyadicPerturbed;
  const std::int64_t c_first = ceil_neg_log2(phi.front()) + (lowered == 0 ? 1 : 0);
  build.bound = entropy(phi) + 2 - endpoint_credit(phi.front(), c_first) -
                endpoint_credit(phi.back()) - to_double(adjacent_min_sum(phi.values()));
  build.bound_id = "dyadic-perturbed";
  return build;
}

}  // namespace

LengthList dyadic_lengths(const ProbDist& phi) {
  if (phi.size() < 2) throw InvalidInput("need at least two symbols");
  if (!is_dyadic(phi) || !phi.all_positive()) {
    throw InvalidInput("dyadic_lengths needs a dyadic distribution without zeros");
  }
  return LengthList(symbol_lengths(phi));
}

Length choose_k(const ProbDist& phi) {
  require_positive_ends(phi);
  return smallest_filler(symbol_lengths(phi), max_ceil(phi) + 2);
}

LengthList extended_lengths(const ProbDist& phi, Length k) {
  require_positive_ends(phi);
  auto lengths = symbol_lengths(phi);
  if (k < *std::max_element(lengths.begin(), lengths.end())) {
    throw InvalidInput("filler length is shorter than a symbol length");
  }
  return interleave(lengths, k);
}

LengthList dyadic_limit_lengths(const ProbDist& phi) {
  if (phi.size() < 4 || !is_dyadic(phi) || !phi.all_positive()) {
    throw InvalidInput("dyadic_limit_lengths needs a dyadic distribution of m >= 4 without zeros");
  }
  auto lengths = symbol_lengths(phi);
  lengths[1] += 1;
  LengthList out(std::move(lengths));
  if (!is_feasible(out)) throw ContractViolation("perturbed dyadic lengths are infeasible");
  return out;
}

CodeTree prune_nulls(const CodeTree& tree, const ExtendedDist& nu) {
  if (tree.empty()) throw InvalidInput("empty tree");
  if (tree.leaf_count() != nu.size() || !tree.is_alphabetic()) {
    throw InvalidInput("tree leaves do not match the extended distribution");
  }
  CodeTree out;
  std::vector<CodeTree::NodeId> image(tree.node_count(), CodeTree::kNone);
  // Post-order: a node is expanded once, then resolved after its children.
  std::vector<std::pair<CodeTree::NodeId, bool>> stack{{tree.root(), false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const auto& n = tree.node(id);
    if (n.is_leaf()) {
      auto pos = static_cast<std::size_t>(n.symbol);
      if (!nu.is_auxiliary(pos)) image[id] = out.add_leaf(nu.symbol_at(pos));
      continue;
    }
    if (!expanded) {
      stack.emplace_back(id, true);
      stack.emplace_back(n.right, false);
      stack.emplace_back(n.left, false);
      continue;
    }
    CodeTree::NodeId l = image[n.left];
    CodeTree::NodeId r = image[n.right];
    if (l == CodeTree::kNone) {
      image[id] = r;
    } else if (r == CodeTree::kNone) {
      image[id] = l;
    } else {
      image[id] = out.add_internal(l, r);
    }
  }
  if (image[tree.root()] == CodeTree::kNone) throw InvalidInput("every leaf is auxiliary");
  out.set_root(image[tree.root()]);
  return out;
}

CodeTree attach_zero_tails(const CodeTree& core, std::size_t first, std::size_t last,
                           std::size_t m) {
  if (core.empty()) throw InvalidInput("empty tree");
  if (first > last || last >= m || core.leaf_count() != last - first + 1) {
    throw InvalidInput("core symbol range does not match the tree");
  }
  CodeTree out;
  std::vector<CodeTree::NodeId> image(core.node_count(), CodeTree::kNone);
  std::vector<std::pair<CodeTree::NodeId, bool>> stack{{core.root(), false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const auto& n = core.node(id);
    if (n.is_leaf()) {
      const std::size_t symbol = static_cast<std::size_t>(n.symbol) + first;
      CodeTree::NodeId node = out.add_leaf(symbol);
      if (symbol == last && last + 1 < m) {
        node = out.add_internal(node, add_comb(out, last + 1, m - 1, false));
      }
      if (symbol == first && first > 0) {
        node = out.add_internal(add_comb(out, 0, first - 1, true), node);
      }
      image[id] = node;
      continue;
    }
    if (!expanded) {
      stack.emplace_back(id, true);
      stack.emplace_back(n.right, false);
      stack.emplace_back(n.left, false);
      continue;
    }
    image[id] = out.add_internal(image[n.left], image[n.right]);
  }
  out.set_root(image[core.root()]);
  return out;
}

std::string_view route_name(Route route) {
  switch (route) {
    case Route::kSingle:
      return "single";
    case Route::kDyadic:
      return "dyadic";
    case Route::kDyadicPerturbed:
      return "dyadic-perturbed";
    case Route::kInterleaved:
      return "interleaved";
  }
  return "unknown";
}

AlphabeticBuild build_alphabetic(const ProbDist& phi) {
  const std::size_t m = phi.size();
  if (m < 2) throw InvalidInput("build_alphabetic needs at least two symbols");
  const std::size_t first = phi.first_positive();
  const std::size_t last = phi.last_positive();

  CoreBuild core;
  if (first == last) {
    core.tree.set_root(core.tree.add_leaf(0));
    core.route = Route::kSingle;
    core.bound_id = "single";
  } else {
    std::vector<Rational> span(phi.values().begin() + static_cast<std::ptrdiff_t>(first),
                               phi.values().begin() + static_cast<std::ptrdiff_t>(last) + 1);
    core = build_core(ProbDist(std::move(span)));
  }

  AlphabeticBuild build;
  build.route = core.route;
  build.bound_id = core.bound_id;
  build.bound = core.bound;
  if (first > 0 || last + 1 < m) {
    build.tree = attach_zero_tails(core.tree, first, last, m);
    build.zero_tails = true;
    build.bound_id = "zero-endpoints";
    // Hanging a tail adds one bit to the adjacent nonzero symbol only.
    if (first > 0) build.bound += to_double(phi[first]);
    if (last + 1 < m) build.bound += to_double(phi[last]);
  } else {
    build.tree = std::move(core.tree);
  }
  if (!build.tree.is_full() || !build.tree.is_alphabetic()) {
    throw ContractViolation("constructed tree is not a full alphabetic tree");
  }
  build.code = build.tree.codewords();
  build.cost = tree_cost(build.tree, phi);
  return build;
}

Rational avg_length(const AlphabeticCode& code, const ProbDist& phi) {
  if (code.size() != phi.size()) throw InvalidInput("code and distribution sizes differ");
  Rational total = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) total += phi[i] * code.codewords[i].size();
  return total;
}

Rational avg_length(const CodeTree& tree, const ProbDist& phi) { return tree_cost(tree, phi); }

}  // namespace alphatree
