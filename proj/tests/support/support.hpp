#pragma once

// Test-side reference computations. None of these call the code under test
// for the quantity they check; they work from definitions on plain rationals
// and explicit tree enumeration.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "alphatree/distribution.hpp"
#include "alphatree/feasibility.hpp"

namespace alphatree::testing {

Rational r(std::int64_t num, std::int64_t den = 1);
ProbDist dist(std::initializer_list<const char*> probs);
SearchDist search(std::initializer_list<const char*> sigma);

/// RNG seeded from ALPHATREE_SEED (or a fixed default) mixed with salt.
std::mt19937_64 make_rng(std::uint64_t salt);

/// Bit i (1-based) after the binary point of x >= 0: floor(x 2^i) mod 2.
bool fractional_bit(const Rational& x, unsigned i);
/// First bit position at which the expansions of a != b differ.
unsigned first_differing_bit(const Rational& a, const Rational& b);

/// sum(L, i) straight from the recursion, as rationals (index 0 is 0).
std::vector<Rational> reference_sums(const std::vector<Length>& lengths);

/// min over adjacent pairs a in [i, j) of first_differing_bit(sums[a], sums[a+1]).
unsigned scan_t_index(const std::vector<Rational>& sums, std::size_t i, std::size_t j);
/// Linear scan for k in [i, j) with sums[k] < floor(2^t sums[i]) / 2^t + 2^-t <= sums[k+1].
std::size_t scan_split(const std::vector<Rational>& sums, std::size_t i, std::size_t j, unsigned t);

/// Leaf depth vectors of every full binary tree with m leaves.
std::vector<std::vector<std::size_t>> all_full_tree_depths(std::size_t m);
/// Whether some full tree has depth_i <= lengths_i for all i.
bool feasible_by_shapes(const std::vector<Length>& lengths);
/// Minimum average length over every full tree shape.
Rational min_alphabetic_cost_by_enumeration(const ProbDist& phi);

/// (q-levels, p-parent-levels) of every search tree over n keys, root at level 1.
struct SearchLevels {
  std::vector<std::size_t> q;  // index 1..n
  std::vector<std::size_t> p;  // index 0..n
};
std::vector<SearchLevels> all_search_tree_levels(std::size_t n);
Rational min_search_cost_by_enumeration(const SearchDist& sigma);

/// Calls f on every composition of total into `parts` nonnegative integers
/// (positive when `positive`).
void for_each_composition(std::size_t parts, std::size_t total, bool positive,
                          const std::function<void(const std::vector<std::size_t>&)>& f);

/// Random probabilities with common denominator `den`; zeros allowed unless positive.
std::vector<Rational> random_probabilities(std::mt19937_64& rng, std::size_t m, std::size_t den,
                                           bool positive);

/// Every distribution of m powers of 1/2 (exponents 1..max_exponent) summing to 1.
std::vector<ProbDist> dyadic_distributions(std::size_t m, unsigned max_exponent);

/// Random lengths in 1..max_length, drawn until the list is feasible.
std::vector<Length> random_feasible_lengths(std::mt19937_64& rng, std::size_t m, Length max_length);

std::string join(const std::vector<Rational>& values);

}  // namespace alphatree::testing
