#include "alphatree/code_tree.hpp"

#include <utility>

#include "alphatree/errors.hpp"

namespace alphatree {

CodeTree::NodeId CodeTree::add_leaf(std::size_t symbol) {
  Node n;
  n.symbol = static_cast<std::int64_t>(symbol);
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size() - 1);
}

CodeTree::NodeId CodeTree::add_internal(NodeId left, NodeId right) {
  Node n;
  n.left = left;
  n.right = right;
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size() - 1);
}

void CodeTree::set_child(NodeId parent, bool right, NodeId child) {
  Node& n = nodes_[static_cast<std::size_t>(parent)];
  (right ? n.right : n.left) = child;
}

std::vector<std::size_t> CodeTree::in_order_symbols() const {
  std::vector<std::size_t> out;
  if (empty()) return out;
  // Right child pushed first so the left subtree is emitted first.
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& n = node(id);
    if (n.is_leaf()) {
      out.push_back(static_cast<std::size_t>(n.symbol));
      continue;
    }
    if (n.right != kNone) stack.push_back(n.right);
    if (n.left != kNone) stack.push_back(n.left);
  }
  return out;
}

std::size_t CodeTree::leaf_count() const { return in_order_symbols().size(); }

std::vector<std::size_t> CodeTree::depths() const {
  std::size_t leaves = leaf_count();
  std::vector<std::size_t> depth(leaves, 0);
  if (empty()) return depth;
  std::vector<std::pair<NodeId, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    const Node& n = node(id);
    if (n.is_leaf()) {
      auto s = static_cast<std::size_t>(n.symbol);
      if (s >= leaves) throw ContractViolation("leaf symbol out of range");
      depth[s] = d;
      continue;
    }
    if (n.left != kNone) stack.emplace_back(n.left, d + 1);
    if (n.right != kNone) stack.emplace_back(n.right, d + 1);
  }
  return depth;
}

AlphabeticCode CodeTree::codewords() const {
  AlphabeticCode code;
  std::size_t leaves = leaf_count();
  code.codewords.resize(leaves);
  if (empty()) return code;
  std::vector<std::pair<NodeId, std::string>> stack;
  stack.emplace_back(root_, std::string());
  while (!stack.empty()) {
    auto [id, path] = std::move(stack.back());
    stack.pop_back();
    const Node& n = node(id);
    if (n.is_leaf()) {
      auto s = static_cast<std::size_t>(n.symbol);
      if (s >= leaves) throw ContractViolation("leaf symbol out of range");
      code.codewords[s] = std::move(path);
      continue;
    }
    if (n.left != kNone) stack.emplace_back(n.left, path + '0');
    if (n.right != kNone) stack.emplace_back(n.right, path + '1');
  }
  return code;
}

bool CodeTree::is_full() const {
  if (empty()) return false;
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const Node& n = node(stack.back());
    stack.pop_back();
    if (n.is_leaf()) continue;
    if (n.left == kNone || n.right == kNone) return false;
    stack.push_back(n.left);
    stack.push_back(n.right);
  }
  return true;
}

bool CodeTree::is_alphabetic() const {
  auto order = in_order_symbols();
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] != i) return false;
  }
  return true;
}

bool operator==(const CodeTree& a, const CodeTree& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  std::vector<std::pair<CodeTree::NodeId, CodeTree::NodeId>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if ((x == CodeTree::kNone) != (y == CodeTree::kNone)) return false;
    if (x == CodeTree::kNone) continue;
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.is_leaf() != ny.is_leaf()) return false;
    if (nx.is_leaf()) {
      if (nx.symbol != ny.symbol) return false;
      continue;
    }
    stack.emplace_back(nx.left, ny.left);
    stack.emplace_back(nx.right, ny.right);
  }
  return true;
}

}  // namespace alphatree
