#include "alphatree/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>

#include "alphatree/errors.hpp"
#include "alphatree/treebuild.hpp"

namespace alphatree {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("ALPHATREE_SEED");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == nullptr || *end != '\0') return fallback;
  return value;
}

LengthList random_interleaving_lengths(std::size_t m, std::mt19937_64& rng) {
  if (m < 2) throw InvalidInput("need at least two symbols");
  std::uniform_int_distribution<std::uint64_t> weight(1, std::uint64_t{1} << 20);
  while (true) {
    std::vector<std::uint64_t> w(m);
    BigNat total = 0;
    for (auto& x : w) {
      x = weight(rng);
      total += x;
    }
    std::vector<Length> lengths(m);
    for (std::size_t i = 0; i < m; ++i) {
      const auto c = static_cast<Length>(ceil_neg_log2(make_rational(BigNat(w[i]), total)));
      lengths[i] = (i == 0 || i + 1 == m) ? c : c + 1;
    }
    LengthList out(std::move(lengths));
    // Only a dyadic draw can land exactly on 1; draw again in that case.
    if (is_feasible(out)) return out;
  }
}

std::vector<ProbeSample> probe_benchmark(std::span<const std::size_t> sizes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ProbeSample> out;
  for (std::size_t m : sizes) {
    const LengthList lengths = random_interleaving_lengths(m, rng);
    ProbeCounter counter;
    const auto start = std::chrono::steady_clock::now();
    const CodeTree tree = construct_tree(lengths, &counter);
    const auto stop = std::chrono::steady_clock::now();
    if (tree.leaf_count() != m) throw ContractViolation("benchmark tree lost leaves");
    ProbeSample s;
    s.m = m;
    s.probes = counter.probes;
    s.splits = counter.splits;
    s.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    out.push_back(s);
  }
  return out;
}

double fit_exponent(std::span<const ProbeSample> samples) {
  if (samples.size() < 2) throw InvalidInput("need at least two sizes to fit an exponent");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& s : samples) {
    if (s.probes == 0) throw InvalidInput("cannot fit a zero probe count");
    const double x = std::log(static_cast<double>(s.m));
    const double y = std::log(static_cast<double>(s.probes));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const auto n = static_cast<double>(samples.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace alphatree
