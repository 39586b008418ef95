#include "alphatree/feasibility.hpp"

#include <algorithm>

#include "alphatree/errors.hpp"

namespace alphatree {

LengthList::LengthList(std::vector<Length> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw InvalidInput("length list must not be empty");
  for (Length l : lengths_) {
    if (l == 0) throw InvalidInput("codeword lengths must be positive");
  }
}

Length LengthList::max() const { return *std::max_element(lengths_.begin(), lengths_.end()); }

bool AlphabeticCode::is_prefix_free() const {
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t j = 0; j < codewords.size(); ++j) {
      if (i != j && codewords[j].starts_with(codewords[i])) return false;
    }
  }
  return true;
}

bool AlphabeticCode::is_ordered() const {
  for (std::size_t i = 1; i < codewords.size(); ++i) {
    if (!(codewords[i - 1] < codewords[i])) return false;
  }
  return true;
}

SumSequence sum_sequence(const LengthList& lengths) {
  SumSequence out;
  out.sums.reserve(lengths.size());
  out.alphas.reserve(lengths.size() - 1);
  out.sums.emplace_back();
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    Length alpha = std::min(lengths[i - 1], lengths[i]);
    out.alphas.push_back(alpha);
    out.sums.push_back(add_pow2(trunc(alpha, out.sums.back()), alpha));
  }
  return out;
}

DyadicFraction final_sum(std::span<const Length> lengths) {
  DyadicFraction sum;
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    Length alpha = std::min(lengths[i - 1], lengths[i]);
    sum = add_pow2(trunc(alpha, sum), alpha);
  }
  return sum;
}

bool is_feasible(const LengthList& lengths) {
  return final_sum(lengths.values()) < DyadicFraction(BigNat(1), 0);
}

AlphabeticCode nakatsu_code(const LengthList& lengths) {
  SumSequence seq = sum_sequence(lengths);
  if (!(seq.last() < DyadicFraction(BigNat(1), 0))) {
    throw InvalidInput("lengths are infeasible: sum(L, m) = " + to_binary_string(seq.last()));
  }
  AlphabeticCode code;
  if (lengths.size() == 1) {
    code.codewords.emplace_back();
    return code;
  }
  code.codewords.reserve(lengths.size());
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    std::string word(lengths[i], '0');
    for (Length b = 1; b <= lengths[i]; ++b) {
      if (seq.sums[i].fractional_bit(b)) word[b - 1] = '1';
    }
    code.codewords.push_back(std::move(word));
  }
  return code;
}

}  // namespace alphatree
