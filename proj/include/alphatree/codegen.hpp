#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "alphatree/code_tree.hpp"
#include "alphatree/distribution.hpp"
#include "alphatree/feasibility.hpp"
#include "alphatree/treebuild.hpp"

namespace alphatree {

/// Lengths for a dyadic phi with no zeros: ceil(-log2 phi_i) at the two
/// endpoints, one more bit for every interior symbol. Requires m >= 2.
LengthList dyadic_lengths(const ProbDist& phi);

/// Filler length for the zero slots of the interleaved list: the smallest
/// k >= max ceil(-log2 phi_j) + 2 for which the endpoint, interior and filler
/// contributions still sum below 1. Requires phi_1, phi_m > 0 and m >= 2;
/// throws InvalidInput if no k exists (dyadic phi leave no slack).
Length choose_k(const ProbDist& phi);

/// Lengths over the partial extension (phi_1, 0, phi_2, ..., 0, phi_m):
/// every zero gets k, phi_1 and phi_m get ceil(-log2 phi), other nonzero
/// symbols ceil(-log2 phi) + 1.
LengthList extended_lengths(const ProbDist& phi, Length k);

/// Core lengths for dyadic phi with m >= 4 and no zeros, as if phi_2 had been
/// lowered and phi_3 raised by an infinitesimal amount: phi_2 gets
/// ceil(-log2 phi_2) + 2, phi_3 ceil(-log2 phi_3) + 1, the rest as in
/// extended_lengths. Checked feasible before it is returned.
LengthList dyadic_limit_lengths(const ProbDist& phi);

/// Removes the leaves of auxiliary positions of nu; the sibling of each such
/// leaf takes its parent's place. Remaining leaves are relabelled with their
/// phi symbol. Requires the tree's leaves to be exactly the positions of nu.
CodeTree prune_nulls(const CodeTree& tree, const ExtendedDist& nu);

/// Extends a code tree for the symbols first..last (labelled 0..last-first)
/// to all m symbols: the leaf of `first` becomes a node whose left subtree is
/// a left comb over the symbols before it, the leaf of `last` a node whose
/// right subtree is a right comb over the symbols after it.
CodeTree attach_zero_tails(const CodeTree& core, std::size_t first, std::size_t last,
                           std::size_t m);

enum class Route {
  kSingle,           // one nonzero symbol
  kDyadic,           // dyadic_lengths
  kDyadicPerturbed,  // lengths of an infinitesimally perturbed dyadic phi
  kInterleaved,      // extended lengths with fillers, fillers pruned
};

std::string_view route_name(Route route);

struct AlphabeticBuild {
  CodeTree tree;
  AlphabeticCode code;
  Rational cost;
  /// How the nonzero span of phi was coded.
  Route route = Route::kSingle;
  /// Zero-probability symbols at either end were hung off the core tree.
  bool zero_tails = false;
  /// Bound the construction is guaranteed to meet.
  std::string bound_id;
  double bound = 0;
};

/// Alphabetic code for phi (m >= 2) meeting the tightest applicable bound.
AlphabeticBuild build_alphabetic(const ProbDist& phi);

/// Sum of phi_i |w_i|, exactly.
Rational avg_length(const AlphabeticCode& code, const ProbDist& phi);
Rational avg_length(const CodeTree& tree, const ProbDist& phi);

}  // namespace alphatree
