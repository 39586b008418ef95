#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "alphatree/dyadic.hpp"

namespace alphatree {

using Length = DyadicFraction::Scale;

/// Codeword lengths <l_1, ..., l_m>, m >= 1, every l_i >= 1.
class LengthList {
 public:
  LengthList(std::vector<Length> lengths);
  LengthList(std::initializer_list<Length> lengths)
      : LengthList(std::vector<Length>(lengths)) {}

  std::size_t size() const { return lengths_.size(); }
  Length operator[](std::size_t i) const { return lengths_[i]; }
  std::span<const Length> values() const { return lengths_; }
  Length max() const;

  friend bool operator==(const LengthList&, const LengthList&) = default;

 private:
  std::vector<Length> lengths_;
};

/// The partial sums sum(L,1..m) together with the alpha_i = min(l_{i-1}, l_i).
/// Indices are 0-based: sums[0] == 0 and alphas[i-1] belongs to sums[i].
struct SumSequence {
  std::vector<DyadicFraction> sums;
  std::vector<Length> alphas;

  const DyadicFraction& last() const { return sums.back(); }
  std::size_t size() const { return sums.size(); }
};

/// Codewords in symbol order, as strings over {'0','1'}.
struct AlphabeticCode {
  std::vector<std::string> codewords;

  std::size_t size() const { return codewords.size(); }
  bool is_prefix_free() const;
  /// Strictly increasing in lexicographic order.
  bool is_ordered() const;
};

SumSequence sum_sequence(const LengthList& lengths);

/// An alphabetic code with exactly these lengths exists iff sum(L, m) < 1.
bool is_feasible(const LengthList& lengths);

/// sum(L, m) without materializing the whole sequence.
DyadicFraction final_sum(std::span<const Length> lengths);

/// Codeword i is the first l_i fractional bits of sum(L, i). A single symbol
/// gets the empty codeword. Throws InvalidInput if L is infeasible.
AlphabeticCode nakatsu_code(const LengthList& lengths);

}  // namespace alphatree
