#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "alphatree/feasibility.hpp"

namespace alphatree {

/// Seed from ALPHATREE_SEED if set and numeric, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

/// Lengths ceil(-log2 phi_i) at the ends and ceil(-log2 phi_i) + 1 inside, for a
/// random phi with integer weights in 1..2^20. Always feasible.
LengthList random_interleaving_lengths(std::size_t m, std::mt19937_64& rng);

struct ProbeSample {
  std::size_t m = 0;
  std::uint64_t probes = 0;
  std::uint64_t splits = 0;
  /// Informational only; not part of any deterministic output.
  double wall_ms = 0;
};

/// One construct_tree run per size on fresh random lengths.
std::vector<ProbeSample> probe_benchmark(std::span<const std::size_t> sizes, std::uint64_t seed);

/// Least-squares slope of log(probes) against log(m).
double fit_exponent(std::span<const ProbeSample> samples);

}  // namespace alphatree
