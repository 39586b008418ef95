#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphatree/distribution.hpp"

namespace alphatree {

/// Shannon entropy in bits (0 log 0 = 0), float64.
double entropy(std::span<const Rational> probs);
double entropy(const ProbDist& phi);
/// Exact entropy when every nonzero probability is a power of 1/2.
std::optional<Rational> exact_dyadic_entropy(const ProbDist& phi);

/// p (2 - log2 p - c), the credit an endpoint of probability p earns when its
/// codeword is c bits long. Zero when p == 0.
double endpoint_credit(const Rational& p, std::int64_t c);
/// endpoint_credit with c = ceil(-log2 p).
double endpoint_credit(const Rational& p);
/// Sum over adjacent pairs of min(x_i, x_{i+1}).
Rational adjacent_min_sum(std::span<const Rational> xs);

struct BoundEntry {
  std::string id;
  /// Short description of the inequality.
  std::string label;
  double value = 0;
  bool applicable = false;
  /// False for bounds that are known not to hold in general.
  bool holds = true;
  /// Upper bound on the cost (as opposed to a lower bound or a gap).
  bool upper_bound = true;
  std::string note;
};

struct BoundsReport {
  double entropy = 0;
  std::optional<Rational> exact_entropy;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& id) const;
  /// Value of an applicable entry; throws InvalidInput otherwise.
  double value(const std::string& id) const;
};

/// Upper bounds on the optimal average codeword length of an alphabetic code.
/// Identifiers:
///   gilbert-moore       H + 2
///   horibe              H + 2 - (m + 2) phi_min
///   yeung               H + 2 - Y(phi_1) - Y(phi_m)
///   yeung-simple        H + 2 - phi_1 - phi_m
///   dagan               H + 2 - phi_1 - phi_m - sum min(phi_i, phi_i+1)
///   dyadic              H + 1 - phi_1 - phi_m                 (dyadic phi)
///   interleaved         H + 2 - Y(phi_1) - Y(phi_m) - sum min
///   interleaved-simple  H + 2 - phi_1 - phi_m - sum min
///   zero-endpoints      interleaved over the span of nonzero probabilities
///   dyadic-perturbed    H + 2 - 2 phi_1 - 2 phi_m - sum min   (dyadic, m >= 4)
///   endpoint-refined    interleaved minus endpoint length slack
///   bump-sets           interleaved with per-symbol min credit
///   bump-sets-exact     exact cost of the interleaved lengths
/// where Y(p) = endpoint_credit(p). For m == 1 only the entropy is reported.
BoundsReport alphabetic_bounds(const ProbDist& phi);

/// Bounds on the optimal expected cost of a binary search tree (root at level 1).
/// Identifiers: mehlhorn, de-prisco-claimed (reported but flagged as not
/// holding), fold-corrected, entropy-lower, gap, gap-bound.
BoundsReport bst_bounds(const SearchDist& sigma);

// Individual bounds used by the constructions.
double dyadic_bound(const ProbDist& phi);
double interleaved_bound(const ProbDist& phi);
double interleaved_simple_bound(const ProbDist& phi);
double dyadic_perturbed_bound(const ProbDist& phi);
double fold_corrected_bound(const SearchDist& sigma);
double mehlhorn_bound(const SearchDist& sigma);

}  // namespace alphatree
