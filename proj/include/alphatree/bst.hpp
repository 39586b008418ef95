#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "alphatree/code_tree.hpp"
#include "alphatree/codegen.hpp"
#include "alphatree/distribution.hpp"

namespace alphatree {

/// Binary search tree over sigma = (p_0, q_1, p_1, ..., q_n, p_n): internal
/// nodes carry a q index (1..n), leaves a p index (0..n).
class SearchTree {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kNone = -1;

  enum class Kind { kP, kQ };

  struct Node {
    NodeId left = kNone;
    NodeId right = kNone;
    Kind kind = Kind::kP;
    std::size_t index = 0;
    bool is_leaf() const { return left == kNone && right == kNone; }
  };

  struct Label {
    Kind kind;
    std::size_t index;
    friend bool operator==(const Label&, const Label&) = default;
  };

  NodeId add_p_leaf(std::size_t i);
  NodeId add_q_node(std::size_t i, NodeId left, NodeId right);
  void set_child(NodeId parent, bool right, NodeId child);
  void set_root(NodeId root) { root_ = root; }

  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t node_count() const { return nodes_.size(); }
  bool empty() const { return root_ == kNone; }

  std::vector<Label> in_order_labels() const;
  /// In-order labels are exactly p_0, q_1, p_1, ..., q_n, p_n, q's are internal
  /// and p's are leaves.
  bool is_valid(std::size_t n) const;
  /// Level of each q_i (index 1..n; entry 0 unused) and of the parent of each
  /// p_i, with the root at level 1.
  std::vector<std::size_t> q_levels(std::size_t n) const;
  std::vector<std::size_t> p_parent_levels(std::size_t n) const;

  friend bool operator==(const SearchTree& a, const SearchTree& b);

 private:
  std::vector<Node> nodes_;
  NodeId root_ = kNone;
};

struct FoldStats {
  std::uint64_t visits = 0;
};

/// Moves every q_i leaf of an alphabetic tree on sigma up to the lowest common
/// ancestor of p_{i-1} and p_i, contracting the q leaf's parent. Requires a
/// full alphabetic tree with 2n+1 leaves and n >= 1.
SearchTree fold_to_bst(const CodeTree& tree, const SearchDist& sigma, FoldStats* stats = nullptr);

/// Sum of q_i level(q_i) + p_i level(parent(p_i)), root at level 1.
Rational bst_cost(const SearchTree& tree, const SearchDist& sigma);

struct BstBuild {
  SearchTree tree;
  Rational cost;
  /// Average codeword length of the alphabetic code before folding.
  Rational alphabetic_cost;
  FoldStats stats;
};

/// build_alphabetic on sigma followed by fold_to_bst. Requires n >= 1.
BstBuild build_bst(const SearchDist& sigma);

}  // namespace alphatree
