#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "alphatree/feasibility.hpp"

namespace alphatree {

/// Binary code tree stored as an arena of nodes. Left edges carry bit 0,
/// right edges bit 1. Leaves carry a 0-based symbol index; internal nodes have
/// both children (the constructions here only ever produce full trees, and
/// is_full() checks it).
class CodeTree {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kNone = -1;

  struct Node {
    NodeId left = kNone;
    NodeId right = kNone;
    std::int64_t symbol = -1;

    bool is_leaf() const { return left == kNone && right == kNone; }
  };

  NodeId add_leaf(std::size_t symbol);
  NodeId add_internal(NodeId left, NodeId right);
  void set_child(NodeId parent, bool right, NodeId child);
  void set_root(NodeId root) { root_ = root; }

  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t node_count() const { return nodes_.size(); }
  bool empty() const { return root_ == kNone; }

  /// Symbols of the leaves reachable from the root, left to right.
  std::vector<std::size_t> in_order_symbols() const;
  std::size_t leaf_count() const;

  /// depth[s] = edge count from the root to the leaf of symbol s. Requires the
  /// reachable leaves to carry exactly the symbols 0..leaf_count()-1.
  std::vector<std::size_t> depths() const;
  AlphabeticCode codewords() const;

  bool is_full() const;
  /// In-order leaves are exactly 0, 1, ..., leaf_count()-1.
  bool is_alphabetic() const;

  /// Structural equality of the reachable trees (arena layout ignored).
  friend bool operator==(const CodeTree& a, const CodeTree& b);

 private:
  std::vector<Node> nodes_;
  NodeId root_ = kNone;
};

}  // namespace alphatree
