#include "alphatree/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "alphatree/errors.hpp"

namespace alphatree {

namespace {

double xlog2x(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

Rational sum_of(std::span<const Rational> xs) {
  Rational total = 0;
  for (const auto& x : xs) total += x;
  return total;
}

BoundEntry make_entry(std::string id, std::string label, double value, bool applicable,
                      std::string note = {}) {
  BoundEntry e;
  e.id = std::move(id);
  e.label = std::move(label);
  e.value = applicable ? value : std::nan("");
  e.applicable = applicable;
  e.note = std::move(note);
  return e;
}

// Index sets of the worst-case bump analysis. Each adjacent pair charges its
// minimum to one member; ties go to the left member.
struct BumpSets {
  std::vector<int> charges;  // per symbol, 0..2
};

BumpSets bump_sets(const ProbDist& phi) {
  BumpSets sets;
  sets.charges.assign(phi.size(), 0);
  for (std::size_t j = 0; j + 1 < phi.size(); ++j) {
    ++sets.charges[phi[j] <= phi[j + 1] ? j : j + 1];
  }
  return sets;
}

// Worst-case cost of the interleaved lengths: endpoints ceil(-log2 p), interior
// ceil(-log2 p) + 1, minus one bit per charged pair.
double bump_sets_exact_value(const ProbDist& phi, const BumpSets& sets) {
  const std::size_t m = phi.size();
  double total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (phi[i] == 0) continue;
    const double p = to_double(phi[i]);
    const auto c = static_cast<double>(ceil_neg_log2(phi[i]));
    const bool endpoint = i == 0 || i + 1 == m;
    total += p * (endpoint ? c : c + 1) - p * sets.charges[i];
  }
  return total;
}

double bump_sets_value(const ProbDist& phi, const BumpSets& sets, double h) {
  const std::size_t m = phi.size();
  double value = h + 2;
  for (std::size_t i = 0; i < m; ++i) {
    const bool endpoint = i == 0 || i + 1 == m;
    if (endpoint || sets.charges[i] > 0) value -= endpoint_credit(phi[i]);
    if (sets.charges[i] == 2 || (endpoint && sets.charges[i] == 1)) value -= to_double(phi[i]);
  }
  return value;
}

}  // namespace

double entropy(std::span<const Rational> probs) {
  double h = 0;
  for (const auto& p : probs) {
    if (p > 0) h -= to_double(p) * log2_of(p);
  }
  return h;
}

double entropy(const ProbDist& phi) { return entropy(phi.values()); }

std::optional<Rational> exact_dyadic_entropy(const ProbDist& phi) {
  if (!is_dyadic(phi)) return std::nullopt;
  Rational h = 0;
  for (const auto& p : phi.values()) {
    if (p > 0) h += p * ceil_neg_log2(p);
  }
  return h;
}

double endpoint_credit(const Rational& p, std::int64_t c) {
  if (p == 0) return 0;
  return to_double(p) * (2 - log2_of(p) - static_cast<double>(c));
}

double endpoint_credit(const Rational& p) {
  if (p == 0) return 0;
  return endpoint_credit(p, ceil_neg_log2(p));
}

Rational adjacent_min_sum(std::span<const Rational> xs) {
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) total += std::min(xs[i], xs[i + 1]);
  return total;
}

const BoundEntry* BoundsReport::find(const std::string& id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

double BoundsReport::value(const std::string& id) const {
  const BoundEntry* e = find(id);
  if (e == nullptr || !e->applicable) throw InvalidInput("bound '" + id + "' is not applicable");
  return e->value;
}

double dyadic_bound(const ProbDist& phi) {
  return entropy(phi) + 1 - to_double(phi.front()) - to_double(phi.back());
}

double interleaved_bound(const ProbDist& phi) {
  return entropy(phi) + 2 - endpoint_credit(phi.front()) - endpoint_credit(phi.back()) -
         to_double(adjacent_min_sum(phi.values()));
}

double interleaved_simple_bound(const ProbDist& phi) {
  return entropy(phi) + 2 - to_double(phi.front() + phi.back() + adjacent_min_sum(phi.values()));
}

double dyadic_perturbed_bound(const ProbDist& phi) {
  return entropy(phi) + 2 -
         to_double(2 * phi.front() + 2 * phi.back() + adjacent_min_sum(phi.values()));
}

BoundsReport alphabetic_bounds(const ProbDist& phi) {
  BoundsReport report;
  report.entropy = entropy(phi);
  report.exact_entropy = exact_dyadic_entropy(phi);
  const std::size_t m = phi.size();
  if (m < 2) return report;

  const double h = report.entropy;
  const double first = to_double(phi.front());
  const double last = to_double(phi.back());
  const double min_sum = to_double(adjacent_min_sum(phi.values()));
  const bool dyadic = is_dyadic(phi);
  const bool all_positive = phi.all_positive();
  const bool ends_positive = phi.front() > 0 && phi.back() > 0;
  const bool perturbable = dyadic && all_positive && m >= 4;
  const bool interleaved_ok = ends_positive && (!dyadic || perturbable);
  const std::string via = dyadic ? "via perturbation" : "";

  auto& out = report.entries;
  out.push_back(make_entry("gilbert-moore", "H + 2", h + 2, true));
  const double phi_min = to_double(*std::min_element(phi.values().begin(), phi.values().end()));
  out.push_back(make_entry("horibe", "H + 2 - (m + 2) phi_min",
                           h + 2 - static_cast<double>(m + 2) * phi_min, true));
  out.push_back(make_entry("yeung", "H + 2 - Y(phi_1) - Y(phi_m)",
                           h + 2 - endpoint_credit(phi.front()) - endpoint_credit(phi.back()),
                           true));
  out.push_back(make_entry("yeung-simple", "H + 2 - phi_1 - phi_m", h + 2 - first - last, true));
  out.push_back(make_entry("dagan", "H + 2 - phi_1 - phi_m - sum min",
                           h + 2 - first - last - min_sum, true));
  out.push_back(make_entry("dyadic", "H + 1 - phi_1 - phi_m", h + 1 - first - last,
                           dyadic && all_positive));
  out.push_back(make_entry("interleaved", "H + 2 - Y(phi_1) - Y(phi_m) - sum min",
                           interleaved_ok ? interleaved_bound(phi) : 0, interleaved_ok, via));
  out.push_back(make_entry("interleaved-simple", "H + 2 - phi_1 - phi_m - sum min",
                           h + 2 - first - last - min_sum, interleaved_ok, via));

  {
    const bool ok = !dyadic && !ends_positive;
    double value = 0;
    if (ok) {
      const std::size_t lo = phi.first_positive();
      const std::size_t hi = phi.last_positive();
      auto credit = [](const Rational& p) {
        return to_double(p) * (1 - log2_of(p) - static_cast<double>(ceil_neg_log2(p)));
      };
      value = h + 2 - credit(phi[lo]) - credit(phi[hi]) -
              to_double(adjacent_min_sum(phi.values().subspan(lo, hi - lo + 1)));
    }
    out.push_back(make_entry("zero-endpoints", "interleaved over the nonzero span", value, ok));
  }

  out.push_back(make_entry("dyadic-perturbed", "H + 2 - 2 phi_1 - 2 phi_m - sum min",
                           perturbable ? dyadic_perturbed_bound(phi) : 0, perturbable));

  {
    const bool ok = m >= 3 && interleaved_ok && phi[1] > 0 && phi[m - 2] > 0;
    double value = 0;
    if (ok) {
      std::int64_t c1 = ceil_neg_log2(phi[0]);
      std::int64_t c2 = ceil_neg_log2(phi[1]);
      std::int64_t cm1 = ceil_neg_log2(phi[m - 2]);
      std::int64_t cm = ceil_neg_log2(phi[m - 1]);
      // The perturbed dyadic code lowers phi_2 slightly, which adds one bit
      // to its length.
      if (dyadic) ++c2;
      value = interleaved_bound(phi) - first * static_cast<double>(std::max<std::int64_t>(0, c1 - c2 - 2)) -
              last * static_cast<double>(std::max<std::int64_t>(0, cm - cm1 - 2));
    }
    out.push_back(make_entry("endpoint-refined", "interleaved minus endpoint slack", value, ok, via));
  }

  {
    const bool ok = ends_positive && !dyadic;
    double value = 0;
    double exact = 0;
    if (ok) {
      BumpSets sets = bump_sets(phi);
      value = bump_sets_value(phi, sets, h);
      exact = bump_sets_exact_value(phi, sets);
    }
    out.push_back(make_entry("bump-sets", "H + 2 - sum Y over bumped symbols - extra bumps",
                             value, ok));
    out.push_back(make_entry("bump-sets-exact", "worst-case cost of the interleaved lengths",
                             exact, ok));
  }
  return report;
}

double mehlhorn_bound(const SearchDist& sigma) {
  return entropy(sigma.interleaved()) + 1 + to_double(sum_of(sigma.ps()));
}

double fold_corrected_bound(const SearchDist& sigma) {
  const auto s = sigma.interleaved();
  return entropy(s) + 2 -
         to_double(s.front() + s.back() + adjacent_min_sum(s) + sum_of(sigma.qs()) +
                   adjacent_min_sum(sigma.ps()));
}

BoundsReport bst_bounds(const SearchDist& sigma) {
  BoundsReport report;
  const auto s = sigma.interleaved();
  const double h = entropy(s);
  report.entropy = h;
  const double sum_p = to_double(sum_of(sigma.ps()));
  const double sum_q = to_double(sum_of(sigma.qs()));
  const double p_max = to_double(*std::max_element(sigma.ps().begin(), sigma.ps().end()));
  const double p0 = to_double(sigma.ps().front());
  const double pn = to_double(sigma.ps().back());
  const double min_sigma = to_double(adjacent_min_sum(s));
  const double min_p = to_double(adjacent_min_sum(sigma.ps()));
  const double ends = to_double(s.front() + s.back());

  const double corrected = fold_corrected_bound(sigma);
  const double lower = h + sum_q + xlog2x(h) - xlog2x(h + 1);

  auto& out = report.entries;
  out.push_back(make_entry("mehlhorn", "H + 1 + sum p", h + 1 + sum_p, true));
  BoundEntry claimed = make_entry("de-prisco-claimed", "H + 1 - p_0 - p_n + p_max",
                                  h + 1 - p0 - pn + p_max, true,
                                  "INVALID (does not hold in general)");
  claimed.holds = false;
  out.push_back(claimed);
  out.push_back(make_entry("fold-corrected",
                           "H + 2 - sigma_1 - sigma_2n+1 - sum min sigma - sum q - sum min p",
                           corrected, true));
  out.push_back(make_entry("entropy-lower", "H + sum q + H log2 H - (H + 1) log2(H + 1)", lower,
                           true, "lower bound, not clamped at 0"));
  out.push_back(make_entry("gap", "fold-corrected - entropy-lower", corrected - lower, true));
  out.push_back(make_entry(
      "gap-bound", "2 + log2(H + 1) + log2 e - sigma_1 - sigma_2n+1 - sum min sigma - 2 sum q - sum min p",
      2 + std::log2(h + 1) + std::numbers::log2e - ends - min_sigma - 2 * sum_q - min_p, true));
  for (auto& e : out) {
    if (e.id == "entropy-lower" || e.id == "gap" || e.id == "gap-bound") e.upper_bound = false;
  }
  return report;
}

}  // namespace alphatree
