#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "alphatree/rational.hpp"

namespace alphatree {

/// Ordered probabilities phi_1..phi_m: exact, nonnegative, summing to exactly 1.
class ProbDist {
 public:
  explicit ProbDist(std::vector<Rational> probs);

  std::size_t size() const { return probs_.size(); }
  const Rational& operator[](std::size_t i) const { return probs_[i]; }
  std::span<const Rational> values() const { return probs_; }

  const Rational& front() const { return probs_.front(); }
  const Rational& back() const { return probs_.back(); }
  bool all_positive() const;
  /// Index of the first / last nonzero probability.
  std::size_t first_positive() const;
  std::size_t last_positive() const;

 private:
  std::vector<Rational> probs_;
};

/// Every nonzero probability is a power of 1/2.
bool is_dyadic(const ProbDist& phi);

/// phi interleaved with zeros. Partial: (phi_1, 0, phi_2, ..., 0, phi_m), length
/// 2m-1. Full: additionally a zero at both ends, length 2m+1.
struct ExtendedDist {
  enum class Kind { kPartial, kFull };

  Kind kind = Kind::kPartial;
  std::vector<Rational> values;

  static ExtendedDist partial(const ProbDist& phi);
  static ExtendedDist full(const ProbDist& phi);

  std::size_t size() const { return values.size(); }
  /// Whether position pos (0-based) is one of the inserted zeros.
  bool is_auxiliary(std::size_t pos) const;
  /// Symbol of phi at a non-auxiliary position.
  std::size_t symbol_at(std::size_t pos) const;
};

/// Search probabilities (p_0, q_1, p_1, ..., q_n, p_n), n >= 0, summing to 1.
class SearchDist {
 public:
  SearchDist(std::vector<Rational> p, std::vector<Rational> q);
  /// From the interleaved sequence sigma_1..sigma_{2n+1}.
  static SearchDist from_interleaved(std::vector<Rational> sigma);

  std::size_t n() const { return q_.size(); }
  const Rational& p(std::size_t i) const { return p_[i]; }
  /// 1-based like the usual notation: q(1)..q(n).
  const Rational& q(std::size_t i) const { return q_[i - 1]; }
  std::span<const Rational> ps() const { return p_; }
  std::span<const Rational> qs() const { return q_; }

  /// sigma = (p_0, q_1, p_1, ..., q_n, p_n).
  std::vector<Rational> interleaved() const;
  ProbDist as_alphabetic() const { return ProbDist(interleaved()); }

 private:
  std::vector<Rational> p_;
  std::vector<Rational> q_;
};

}  // namespace alphatree
