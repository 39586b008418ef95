#include "support.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace alphatree::testing {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed'a1fa'7ee5ULL;

Rational pow2(unsigned e) { return Rational(BigNat(1) << e); }

Rational truncate(const Rational& x, unsigned t) {
  const Rational scaled = x * pow2(t);
  const BigNat whole = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  return Rational(whole) / pow2(t);
}

}  // namespace

Rational r(std::int64_t num, std::int64_t den) { return Rational(num) / Rational(den); }

ProbDist dist(std::initializer_list<const char*> probs) {
  std::vector<Rational> v;
  for (const char* p : probs) v.push_back(parse_rational(p));
  return ProbDist(std::move(v));
}

SearchDist search(std::initializer_list<const char*> sigma) {
  std::vector<Rational> v;
  for (const char* p : sigma) v.push_back(parse_rational(p));
  return SearchDist::from_interleaved(std::move(v));
}

std::mt19937_64 make_rng(std::uint64_t salt) {
  std::uint64_t seed = kDefaultSeed;
  if (const char* raw = std::getenv("ALPHATREE_SEED"); raw != nullptr && *raw != '\0') {
    seed = std::strtoull(raw, nullptr, 10);
  }
  std::seed_seq seq{seed, salt};
  return std::mt19937_64(seq);
}

bool fractional_bit(const Rational& x, unsigned i) {
  const Rational scaled = x * pow2(i);
  const BigNat whole = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  return bit_test(whole, 0);
}

unsigned first_differing_bit(const Rational& a, const Rational& b) {
  if (a == b) throw std::invalid_argument("equal values have no differing bit");
  for (unsigned i = 1;; ++i) {
    if (fractional_bit(a, i) != fractional_bit(b, i)) return i;
  }
}

std::vector<Rational> reference_sums(const std::vector<Length>& lengths) {
  std::vector<Rational> sums{Rational(0)};
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    const unsigned alpha = std::min(lengths[i - 1], lengths[i]);
    sums.push_back(truncate(sums.back(), alpha) + 1 / pow2(alpha));
  }
  return sums;
}

unsigned scan_t_index(const std::vector<Rational>& sums, std::size_t i, std::size_t j) {
  unsigned best = ~0u;
  for (std::size_t a = i; a < j; ++a) best = std::min(best, first_differing_bit(sums[a], sums[a + 1]));
  return best;
}

std::size_t scan_split(const std::vector<Rational>& sums, std::size_t i, std::size_t j, unsigned t) {
  const Rational threshold = truncate(sums[i], t) + 1 / pow2(t);
  for (std::size_t k = i; k < j; ++k) {
    if (sums[k] < threshold && threshold <= sums[k + 1]) return k;
  }
  throw std::logic_error("no split position");
}

std::vector<std::vector<std::size_t>> all_full_tree_depths(std::size_t m) {
  if (m == 1) return {{0}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t left = 1; left < m; ++left) {
    for (const auto& a : all_full_tree_depths(left)) {
      for (const auto& b : all_full_tree_depths(m - left)) {
        std::vector<std::size_t> d;
        for (auto x : a) d.push_back(x + 1);
        for (auto x : b) d.push_back(x + 1);
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

bool feasible_by_shapes(const std::vector<Length>& lengths) {
  for (const auto& depths : all_full_tree_depths(lengths.size())) {
    bool ok = true;
    for (std::size_t i = 0; i < depths.size() && ok; ++i) ok = depths[i] <= lengths[i];
    if (ok) return true;
  }
  return false;
}

Rational min_alphabetic_cost_by_enumeration(const ProbDist& phi) {
  bool first = true;
  Rational best;
  for (const auto& depths : all_full_tree_depths(phi.size())) {
    Rational c = 0;
    for (std::size_t i = 0; i < depths.size(); ++i) c += phi[i] * depths[i];
    if (first || c < best) best = c;
    first = false;
  }
  return best;
}

namespace {

// Levels of keys lo+1..hi and leaves lo..hi of a subtree rooted at `level`.
void search_levels(std::size_t lo, std::size_t hi, std::size_t level, SearchLevels& cur,
                   const std::function<void()>& emit) {
  if (lo == hi) {
    cur.p[lo] = level - 1;
    emit();
    return;
  }
  for (std::size_t root = lo + 1; root <= hi; ++root) {
    cur.q[root] = level;
    search_levels(lo, root - 1, level + 1, cur, [&] {
      search_levels(root, hi, level + 1, cur, emit);
    });
  }
}

}  // namespace

std::vector<SearchLevels> all_search_tree_levels(std::size_t n) {
  std::vector<SearchLevels> out;
  SearchLevels cur{std::vector<std::size_t>(n + 1, 0), std::vector<std::size_t>(n + 1, 0)};
  search_levels(0, n, 1, cur, [&] { out.push_back(cur); });
  return out;
}

Rational min_search_cost_by_enumeration(const SearchDist& sigma) {
  bool first = true;
  Rational best;
  for (const auto& lv : all_search_tree_levels(sigma.n())) {
    Rational c = 0;
    for (std::size_t i = 1; i <= sigma.n(); ++i) c += sigma.q(i) * lv.q[i];
    for (std::size_t i = 0; i <= sigma.n(); ++i) c += sigma.p(i) * lv.p[i];
    if (first || c < best) best = c;
    first = false;
  }
  return best;
}

void for_each_composition(std::size_t parts, std::size_t total, bool positive,
                          const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur(parts, 0);
  const std::size_t floor = positive ? 1 : 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t left) {
    if (idx + 1 == parts) {
      if (left < floor) return;
      cur[idx] = left;
      f(cur);
      return;
    }
    const std::size_t reserve = floor * (parts - idx - 1);
    if (left < reserve) return;
    for (std::size_t v = floor; v + reserve <= left; ++v) {
      cur[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, total);
}

std::vector<Rational> random_probabilities(std::mt19937_64& rng, std::size_t m, std::size_t den,
                                           bool positive) {
  if (positive && den < m) throw std::invalid_argument("denominator too small");
  // Stars and bars: choose m - 1 cut points.
  std::vector<std::size_t> counts(m, positive ? 1 : 0);
  std::size_t remaining = den - (positive ? m : 0);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::size_t k = 0; k < remaining; ++k) ++counts[pick(rng)];
  std::vector<Rational> out;
  for (auto c : counts) out.push_back(Rational(c) / Rational(den));
  return out;
}

std::vector<ProbDist> dyadic_distributions(std::size_t m, unsigned max_exponent) {
  std::vector<ProbDist> out;
  std::vector<unsigned> e(m, 1);
  while (true) {
    Rational total = 0;
    for (auto x : e) total += 1 / pow2(x);
    if (total == 1) {
      std::vector<Rational> v;
      for (auto x : e) v.push_back(1 / pow2(x));
      out.emplace_back(std::move(v));
    }
    std::size_t k = 0;
    while (k < m && e[k] == max_exponent) e[k++] = 1;
    if (k == m) break;
    ++e[k];
  }
  return out;
}

std::vector<Length> random_feasible_lengths(std::mt19937_64& rng, std::size_t m, Length max_length) {
  std::uniform_int_distribution<Length> pick(1, max_length);
  while (true) {
    std::vector<Length> l(m);
    for (auto& x : l) x = pick(rng);
    if (reference_sums(l).back() < 1) return l;
  }
}

std::string join(const std::vector<Rational>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + to_string(values[i]);
  return s + ")";
}

}  // namespace alphatree::testing
