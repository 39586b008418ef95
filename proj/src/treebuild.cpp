#include "alphatree/treebuild.hpp"

#include <string>
#include <vector>

#include "alphatree/errors.hpp"

namespace alphatree {

namespace {

const DyadicFraction& one() {
  static const DyadicFraction kOne(BigNat(1), 0);
  return kOne;
}

void check_range(const SumSequence& seq, std::size_t i, std::size_t j) {
  if (i >= j || j >= seq.size()) {
    throw InvalidInput("index range [" + std::to_string(i) + ", " + std::to_string(j) +
                       "] must satisfy i < j < m");
  }
}

}  // namespace

Length t_index(const SumSequence& seq, std::size_t i, std::size_t j) {
  check_range(seq, i, j);
  return ceil_neg_log2(bit_xor(seq.sums[i], seq.sums[j]));
}

std::size_t split_index(const SumSequence& seq, std::size_t i, std::size_t j, Length t,
                        ProbeCounter* counter) {
  if (t != t_index(seq, i, j)) {
    throw InvalidInput("split level " + std::to_string(t) + " is not t_index of the range");
  }
  const DyadicFraction threshold = add_pow2(trunc(t, seq.sums[i]), t);
  std::uint64_t probes = 0;
  auto below = [&](std::size_t x) {
    ++probes;
    return seq.sums[x] < threshold;
  };

  // Invariant for the final binary search: below(lo) holds, below(hi) fails.
  std::size_t lo;
  std::size_t hi;
  const std::size_t mid = (i + j) / 2;  // ceil((i + j - 1) / 2)
  if (below(mid)) {
    // k in [mid, j): gallop leftwards from j.
    hi = j;
    lo = mid;
    for (std::size_t step = 1; j - step > mid; step <<= 1) {
      if (below(j - step)) {
        lo = j - step;
        break;
      }
      hi = j - step;
    }
  } else {
    // k in [i, mid): gallop rightwards from i.
    lo = i;
    hi = mid;
    for (std::size_t step = 1; i + step < mid; step <<= 1) {
      if (!below(i + step)) {
        hi = i + step;
        break;
      }
      lo = i + step;
    }
  }
  while (hi - lo > 1) {
    std::size_t probe = lo + (hi - lo) / 2;
    (below(probe) ? lo : hi) = probe;
  }
  if (counter != nullptr) {
    counter->probes += probes;
    counter->splits += 1;
  }
  return lo;
}

CodeTree construct_tree(const LengthList& lengths, ProbeCounter* counter) {
  return construct_tree(sum_sequence(lengths), counter);
}

CodeTree construct_tree(const SumSequence& seq, ProbeCounter* counter) {
  if (!(seq.last() < one())) {
    throw InvalidInput("lengths are infeasible: sum(L, m) = " + to_binary_string(seq.last()));
  }
  struct Task {
    std::size_t i;
    std::size_t j;
    CodeTree::NodeId parent;
    bool right;
  };
  CodeTree tree;
  std::vector<Task> stack{{0, seq.size() - 1, CodeTree::kNone, false}};
  while (!stack.empty()) {
    Task task = stack.back();
    stack.pop_back();
    CodeTree::NodeId id;
    if (task.i == task.j) {
      id = tree.add_leaf(task.i);
    } else if (task.i + 1 == task.j) {
      id = tree.add_internal(tree.add_leaf(task.i), tree.add_leaf(task.j));
    } else {
      Length t = t_index(seq, task.i, task.j);
      std::size_t k = split_index(seq, task.i, task.j, t, counter);
      id = tree.add_internal(CodeTree::kNone, CodeTree::kNone);
      stack.push_back({k + 1, task.j, id, true});
      stack.push_back({task.i, k, id, false});
    }
    if (task.parent == CodeTree::kNone) {
      tree.set_root(id);
    } else {
      tree.set_child(task.parent, task.right, id);
    }
  }
  return tree;
}

}  // namespace alphatree
