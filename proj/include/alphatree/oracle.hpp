#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "alphatree/bst.hpp"
#include "alphatree/code_tree.hpp"
#include "alphatree/distribution.hpp"
#include "alphatree/feasibility.hpp"

namespace alphatree {

struct AlphabeticOptimum {
  Rational cost;
  CodeTree tree;
};

/// Minimum average codeword length over all alphabetic codes, by interval DP
/// cost[i..j] = weight(i..j) + min_k cost[i..k] + cost[k+1..j]. Ties go to the
/// smallest k. Cubic in m.
AlphabeticOptimum optimal_alphabetic_dp(const ProbDist& phi);

struct BstOptimum {
  Rational cost;
  SearchTree tree;
};

/// Minimum expected search cost (root at level 1, p_i charged at its parent's
/// level). Cubic by default; `monotone_roots` restricts the root search to
/// root[i][j-1] <= r <= root[i+1][j]. Requires n >= 1.
BstOptimum optimal_bst_dp(const SearchDist& sigma, bool monotone_roots = false);

/// Whether some full binary tree with m in-order leaves has depth_i <= l_i for
/// every i (padding codewords then reaches the lengths exactly). Searches the
/// trees directly; requires m <= 10.
bool feasible_by_enumeration(const LengthList& lengths);

/// Same verdicts as feasible_by_enumeration for every list of m symbols with
/// lengths in 1..max_length, precomputed from all tree shapes with m leaves.
class FeasibilityTable {
 public:
  FeasibilityTable(std::size_t m, Length max_length);

  bool feasible(std::span<const Length> lengths) const;
  std::size_t size() const { return m_; }
  Length max_length() const { return max_length_; }

 private:
  std::size_t index_of(std::span<const Length> lengths) const;

  std::size_t m_;
  Length max_length_;
  std::vector<std::uint8_t> feasible_;
};

/// For non-increasing dyadic phi without zeros: true iff every fully extended
/// list (x_1, c_1 + 1, x_2, ..., c_m + 1, x_{m+1}), c_i = -log2 phi_i, with
/// fillers x in 1..x_max, has sum(L, 2m+1) >= 1, i.e. no such alphabetic code
/// exists.
bool dyadic_fillers_infeasible(const ProbDist& phi, Length x_max);

}  // namespace alphatree
