#include "alphatree/distribution.hpp"

#include <string>

#include "alphatree/errors.hpp"

namespace alphatree {

namespace {

void check_probabilities(std::span<const Rational> probs) {
  Rational total = 0;
  for (const auto& p : probs) {
    if (p < 0) throw InvalidInput("probabilities must be nonnegative, got " + to_string(p));
    total += p;
  }
  if (total != 1) throw InvalidInput("probabilities sum to " + to_string(total) + ", not 1");
}

}  // namespace

ProbDist::ProbDist(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidInput("a distribution needs at least one symbol");
  check_probabilities(probs_);
}

bool ProbDist::all_positive() const {
  for (const auto& p : probs_) {
    if (p == 0) return false;
  }
  return true;
}

std::size_t ProbDist::first_positive() const {
  std::size_t i = 0;
  while (probs_[i] == 0) ++i;
  return i;
}

std::size_t ProbDist::last_positive() const {
  std::size_t i = probs_.size() - 1;
  while (probs_[i] == 0) --i;
  return i;
}

bool is_dyadic(const ProbDist& phi) {
  for (const auto& p : phi.values()) {
    if (p != 0 && !is_power_of_two(p)) return false;
  }
  return true;
}

ExtendedDist ExtendedDist::partial(const ProbDist& phi) {
  ExtendedDist nu;
  nu.kind = Kind::kPartial;
  nu.values.reserve(2 * phi.size() - 1);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i > 0) nu.values.emplace_back(0);
    nu.values.push_back(phi[i]);
  }
  return nu;
}

ExtendedDist ExtendedDist::full(const ProbDist& phi) {
  ExtendedDist nu;
  nu.kind = Kind::kFull;
  nu.values.reserve(2 * phi.size() + 1);
  nu.values.emplace_back(0);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    nu.values.push_back(phi[i]);
    nu.values.emplace_back(0);
  }
  return nu;
}

bool ExtendedDist::is_auxiliary(std::size_t pos) const {
  return kind == Kind::kPartial ? pos % 2 == 1 : pos % 2 == 0;
}

std::size_t ExtendedDist::symbol_at(std::size_t pos) const {
  if (is_auxiliary(pos)) throw InvalidInput("position " + std::to_string(pos) + " is auxiliary");
  return kind == Kind::kPartial ? pos / 2 : (pos - 1) / 2;
}

SearchDist::SearchDist(std::vector<Rational> p, std::vector<Rational> q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.size() != q_.size() + 1) {
    throw InvalidInput("a search distribution needs exactly one more p than q");
  }
  check_probabilities(interleaved());
}

SearchDist SearchDist::from_interleaved(std::vector<Rational> sigma) {
  if (sigma.size() % 2 == 0) throw InvalidInput("interleaved search distribution must have odd length");
  std::vector<Rational> p;
  std::vector<Rational> q;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    (i % 2 == 0 ? p : q).push_back(std::move(sigma[i]));
  }
  return SearchDist(std::move(p), std::move(q));
}

std::vector<Rational> SearchDist::interleaved() const {
  std::vector<Rational> sigma;
  sigma.reserve(p_.size() + q_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i > 0) sigma.push_back(q_[i - 1]);
    sigma.push_back(p_[i]);
  }
  return sigma;
}

}  // namespace alphatree
