#include "alphatree/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "alphatree/errors.hpp"

namespace alphatree {

namespace {

constexpr std::size_t kEnumerationLimit = 10;

// Scales the rationals to integers over their common denominator, which keeps
// the DP exact without rational normalization in the inner loop.
std::vector<BigNat> scaled_weights(std::span<const Rational> probs, BigNat& denominator) {
  denominator = 1;
  for (const auto& p : probs) {
    const BigNat d = boost::multiprecision::denominator(p);
    denominator = denominator / boost::multiprecision::gcd(denominator, d) * d;
  }
  std::vector<BigNat> out;
  out.reserve(probs.size());
  for (const auto& p : probs) {
    out.push_back(boost::multiprecision::numerator(p) * (denominator / boost::multiprecision::denominator(p)));
  }
  return out;
}

// Triangular table indexed by 0 <= i <= j < size.
template <typename T>
class Triangle {
 public:
  explicit Triangle(std::size_t size) : size_(size), cells_(size * (size + 1) / 2) {}
  T& at(std::size_t i, std::size_t j) { return cells_[offset(i) + (j - i)]; }
  const T& at(std::size_t i, std::size_t j) const { return cells_[offset(i) + (j - i)]; }

 private:
  std::size_t offset(std::size_t i) const { return i * size_ - i * (i - 1) / 2; }
  std::size_t size_;
  std::vector<T> cells_;
};

// Depth-first search for a full tree over leaves [i, j] rooted at depth d.
bool fits(std::span<const Length> lengths, std::size_t i, std::size_t j, std::size_t d) {
  if (i == j) return d <= lengths[i];
  // Every leaf below sits at depth >= d + 1.
  for (std::size_t x = i; x <= j; ++x) {
    if (lengths[x] < d + 1) return false;
  }
  for (std::size_t k = i; k < j; ++k) {
    if (fits(lengths, i, k, d + 1) && fits(lengths, k + 1, j, d + 1)) return true;
  }
  return false;
}

// Depth vectors of every full binary tree with m leaves.
std::vector<std::vector<Length>> all_tree_depths(std::size_t m) {
  std::vector<std::vector<std::vector<Length>>> shapes(m + 1);
  shapes[1] = {{0}};
  for (std::size_t size = 2; size <= m; ++size) {
    for (std::size_t left = 1; left < size; ++left) {
      for (const auto& a : shapes[left]) {
        for (const auto& b : shapes[size - left]) {
          std::vector<Length> depths;
          depths.reserve(size);
          for (Length d : a) depths.push_back(d + 1);
          for (Length d : b) depths.push_back(d + 1);
          shapes[size].push_back(std::move(depths));
        }
      }
    }
  }
  return std::move(shapes[m]);
}

}  // namespace

AlphabeticOptimum optimal_alphabetic_dp(const ProbDist& phi) {
  const std::size_t m = phi.size();
  BigNat denominator;
  const std::vector<BigNat> w = scaled_weights(phi.values(), denominator);
  std::vector<BigNat> prefix(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + w[i];

  Triangle<BigNat> cost(m);
  Triangle<std::size_t> split(m);
  for (std::size_t len = 2; len <= m; ++len) {
    for (std::size_t i = 0; i + len <= m; ++i) {
      const std::size_t j = i + len - 1;
      BigNat best = cost.at(i, i) + cost.at(i + 1, j);
      std::size_t best_k = i;
      for (std::size_t k = i + 1; k < j; ++k) {
        BigNat c = cost.at(i, k) + cost.at(k + 1, j);
        if (c < best) {
          best = std::move(c);
          best_k = k;
        }
      }
      cost.at(i, j) = best + (prefix[j + 1] - prefix[i]);
      split.at(i, j) = best_k;
    }
  }

  AlphabeticOptimum out;
  out.cost = make_rational(cost.at(0, m - 1), denominator);
  struct Task {
    std::size_t i, j;
    CodeTree::NodeId parent;
    bool right;
  };
  std::vector<Task> stack{{0, m - 1, CodeTree::kNone, false}};
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    CodeTree::NodeId id;
    if (t.i == t.j) {
      id = out.tree.add_leaf(t.i);
    } else {
      id = out.tree.add_internal(CodeTree::kNone, CodeTree::kNone);
      const std::size_t k = split.at(t.i, t.j);
      stack.push_back({k + 1, t.j, id, true});
      stack.push_back({t.i, k, id, false});
    }
    if (t.parent == CodeTree::kNone) {
      out.tree.set_root(id);
    } else {
      out.tree.set_child(t.parent, t.right, id);
    }
  }
  return out;
}

BstOptimum optimal_bst_dp(const SearchDist& sigma, bool monotone_roots) {
  const std::size_t n = sigma.n();
  if (n == 0) throw InvalidInput("optimal_bst_dp needs n >= 1");
  BigNat denominator;
  // Interleaved weights: p_i at 2i, q_i at 2i - 1.
  const std::vector<BigNat> w = scaled_weights(sigma.interleaved(), denominator);
  std::vector<BigNat> prefix(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) prefix[i + 1] = prefix[i] + w[i];
  // Weight of p_i, q_{i+1}, ..., q_j, p_j.
  auto weight = [&](std::size_t i, std::size_t j) { return prefix[2 * j + 1] - prefix[2 * i]; };

  // cost(i, j): subtree holding q_{i+1}..q_j and p_i..p_j; leaves cost 0.
  Triangle<BigNat> cost(n + 1);
  Triangle<std::size_t> root(n + 1);
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len;
      std::size_t lo = i + 1;
      std::size_t hi = j;
      if (monotone_roots && len > 1) {
        lo = root.at(i, j - 1);
        hi = root.at(i + 1, j);
        if (lo > hi) throw ContractViolation("root table is not monotone");
      }
      BigNat best;
      std::size_t best_r = 0;
      for (std::size_t r = lo; r <= hi; ++r) {
        BigNat c = cost.at(i, r - 1) + cost.at(r, j);
        if (best_r == 0 || c < best) {
          best = std::move(c);
          best_r = r;
        }
      }
      cost.at(i, j) = best + weight(i, j);
      root.at(i, j) = best_r;
    }
  }

  BstOptimum out;
  out.cost = make_rational(cost.at(0, n), denominator);
  struct Task {
    std::size_t i, j;
    SearchTree::NodeId parent;
    bool right;
  };
  std::vector<Task> stack{{0, n, SearchTree::kNone, false}};
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    SearchTree::NodeId id;
    if (t.i == t.j) {
      id = out.tree.add_p_leaf(t.i);
    } else {
      const std::size_t r = root.at(t.i, t.j);
      id = out.tree.add_q_node(r, SearchTree::kNone, SearchTree::kNone);
      stack.push_back({r, t.j, id, true});
      stack.push_back({t.i, r - 1, id, false});
    }
    if (t.parent == SearchTree::kNone) {
      out.tree.set_root(id);
    } else {
      out.tree.set_child(t.parent, t.right, id);
    }
  }
  return out;
}

bool feasible_by_enumeration(const LengthList& lengths) {
  if (lengths.size() > kEnumerationLimit) {
    throw InvalidInput("enumeration is limited to m <= " + std::to_string(kEnumerationLimit));
  }
  return fits(lengths.values(), 0, lengths.size() - 1, 0);
}

FeasibilityTable::FeasibilityTable(std::size_t m, Length max_length)
    : m_(m), max_length_(max_length) {
  if (m == 0 || m > kEnumerationLimit) {
    throw InvalidInput("table size must be in 1.." + std::to_string(kEnumerationLimit));
  }
  if (max_length == 0) throw InvalidInput("max_length must be positive");
  std::size_t cells = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (cells > std::numeric_limits<std::size_t>::max() / max_length) {
      throw InvalidInput("table too large");
    }
    cells *= max_length;
  }
  feasible_.assign(cells, 0);

  // Mark the depth vectors of all tree shapes (depth 0 is only possible for a
  // single leaf and is clamped to 1, which the closure below then covers).
  for (auto& depths : all_tree_depths(m)) {
    bool in_range = true;
    for (auto& d : depths) {
      if (d == 0) d = 1;
      if (d > max_length_) in_range = false;
    }
    if (in_range) feasible_[index_of(depths)] = 1;
  }

  // Upward closure: L is feasible iff some tree has depths <= L, so propagate
  // along each coordinate in increasing order.
  std::size_t stride = 1;
  for (std::size_t axis = 0; axis < m; ++axis) {
    for (std::size_t cell = 0; cell < cells; ++cell) {
      if ((cell / stride) % max_length != 0 && feasible_[cell - stride] != 0) feasible_[cell] = 1;
    }
    stride *= max_length;
  }
}

std::size_t FeasibilityTable::index_of(std::span<const Length> lengths) const {
  std::size_t index = 0;
  for (std::size_t i = m_; i-- > 0;) index = index * max_length_ + (lengths[i] - 1);
  return index;
}

bool FeasibilityTable::feasible(std::span<const Length> lengths) const {
  if (lengths.size() != m_) throw InvalidInput("length list size does not match the table");
  for (Length l : lengths) {
    if (l < 1 || l > max_length_) throw InvalidInput("length outside the table range");
  }
  return feasible_[index_of(lengths)] != 0;
}

bool dyadic_fillers_infeasible(const ProbDist& phi, Length x_max) {
  if (x_max == 0) throw InvalidInput("x_max must be positive");
  if (!is_dyadic(phi) || !phi.all_positive()) {
    throw InvalidInput("dyadic_fillers_infeasible needs a dyadic distribution without zeros");
  }
  for (std::size_t i = 0; i + 1 < phi.size(); ++i) {
    if (phi[i] < phi[i + 1]) throw InvalidInput("dyadic_fillers_infeasible needs a non-increasing distribution");
  }
  const std::size_t m = phi.size();
  std::vector<Length> list(2 * m + 1, 1);
  for (std::size_t i = 0; i < m; ++i) {
    list[2 * i + 1] = static_cast<Length>(ceil_neg_log2(phi[i]) + 1);
  }
  const DyadicFraction one(BigNat(1), 0);
  // Odometer over the m + 1 filler slots.
  while (true) {
    if (final_sum(list) < one) return false;
    std::size_t slot = 0;
    while (slot <= m && list[2 * slot] == x_max) {
      list[2 * slot] = 1;
      ++slot;
    }
    if (slot > m) return true;
    ++list[2 * slot];
  }
}

}  // namespace alphatree
