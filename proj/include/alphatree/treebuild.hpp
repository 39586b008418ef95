#pragma once

#include <cstddef>
#include <cstdint>

#include "alphatree/code_tree.hpp"
#include "alphatree/feasibility.hpp"

namespace alphatree {

/// Instrumentation for the split search. A probe is one comparison of a
/// partial sum against a split threshold.
struct ProbeCounter {
  std::uint64_t probes = 0;
  std::uint64_t splits = 0;
};

// All indices below are 0-based positions into SumSequence::sums.

/// First bit position at which sums[i..j] stop agreeing, computed as
/// ceil(-log2(sums[i] xor sums[j])). Requires i < j and a feasible sequence.
Length t_index(const SumSequence& seq, std::size_t i, std::size_t j);

/// The k in [i, j) with sums[k] < trunc(t, sums[i]) + 2^-t <= sums[k+1].
///
/// Probes the midpoint first to pick a side, then gallops from that side's
/// outer end and finishes with a binary search, so the probe count is
/// O(log min(k - i + 1, j - k)). Throws InvalidInput if t is not t_index(i, j).
std::size_t split_index(const SumSequence& seq, std::size_t i, std::size_t j, Length t,
                        ProbeCounter* counter = nullptr);

/// Top-down bisection of the partial sums into a full alphabetic code tree
/// whose leaf depths satisfy depth_i <= min(l_i, m - 1). Throws InvalidInput
/// if the lengths are infeasible.
CodeTree construct_tree(const LengthList& lengths, ProbeCounter* counter = nullptr);
CodeTree construct_tree(const SumSequence& seq, ProbeCounter* counter = nullptr);

}  // namespace alphatree
