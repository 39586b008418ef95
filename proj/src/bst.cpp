#include "alphatree/bst.hpp"

#include <utility>

#include "alphatree/errors.hpp"

namespace alphatree {

SearchTree::NodeId SearchTree::add_p_leaf(std::size_t i) {
  Node n;
  n.kind = Kind::kP;
  n.index = i;
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size() - 1);
}

SearchTree::NodeId SearchTree::add_q_node(std::size_t i, NodeId left, NodeId right) {
  Node n;
  n.kind = Kind::kQ;
  n.index = i;
  n.left = left;
  n.right = right;
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size() - 1);
}

void SearchTree::set_child(NodeId parent, bool right, NodeId child) {
  Node& n = nodes_[static_cast<std::size_t>(parent)];
  (right ? n.right : n.left) = child;
}

std::vector<SearchTree::Label> SearchTree::in_order_labels() const {
  std::vector<Label> out;
  if (empty()) return out;
  std::vector<NodeId> stack;
  NodeId cur = root_;
  while (cur != kNone || !stack.empty()) {
    while (cur != kNone) {
      stack.push_back(cur);
      cur = node(cur).left;
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back({node(cur).kind, node(cur).index});
    cur = node(cur).right;
  }
  return out;
}

bool SearchTree::is_valid(std::size_t n) const {
  auto labels = in_order_labels();
  if (labels.size() != 2 * n + 1) return false;
  for (std::size_t pos = 0; pos < labels.size(); ++pos) {
    Label want = pos % 2 == 0 ? Label{Kind::kP, pos / 2} : Label{Kind::kQ, pos / 2 + 1};
    if (labels[pos] != want) return false;
  }
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const Node& nd = node(stack.back());
    stack.pop_back();
    if ((nd.kind == Kind::kP) != nd.is_leaf()) return false;
    if (nd.left != kNone) stack.push_back(nd.left);
    if (nd.right != kNone) stack.push_back(nd.right);
  }
  return true;
}

namespace {

// Calls visit(node, level) for every node, root at level 1.
template <typename Visit>
void for_each_level(const SearchTree& tree, Visit visit) {
  if (tree.empty()) return;
  std::vector<std::pair<SearchTree::NodeId, std::size_t>> stack{{tree.root(), 1}};
  while (!stack.empty()) {
    auto [id, level] = stack.back();
    stack.pop_back();
    const auto& n = tree.node(id);
    visit(n, level);
    if (n.left != SearchTree::kNone) stack.emplace_back(n.left, level + 1);
    if (n.right != SearchTree::kNone) stack.emplace_back(n.right, level + 1);
  }
}

}  // namespace

std::vector<std::size_t> SearchTree::q_levels(std::size_t n) const {
  std::vector<std::size_t> levels(n + 1, 0);
  for_each_level(*this, [&](const Node& nd, std::size_t level) {
    if (nd.kind == Kind::kQ && nd.index <= n) levels[nd.index] = level;
  });
  return levels;
}

std::vector<std::size_t> SearchTree::p_parent_levels(std::size_t n) const {
  std::vector<std::size_t> levels(n + 1, 0);
  for_each_level(*this, [&](const Node& nd, std::size_t level) {
    if (nd.kind == Kind::kP && nd.index <= n) levels[nd.index] = level - 1;
  });
  return levels;
}

bool operator==(const SearchTree& a, const SearchTree& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  std::vector<std::pair<SearchTree::NodeId, SearchTree::NodeId>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if ((x == SearchTree::kNone) != (y == SearchTree::kNone)) return false;
    if (x == SearchTree::kNone) continue;
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.kind != ny.kind || nx.index != ny.index) return false;
    stack.emplace_back(nx.left, ny.left);
    stack.emplace_back(nx.right, ny.right);
  }
  return true;
}

SearchTree fold_to_bst(const CodeTree& tree, const SearchDist& sigma, FoldStats* stats) {
  const std::size_t n = sigma.n();
  if (n == 0) throw InvalidInput("folding needs at least one q");
  if (tree.empty() || !tree.is_full() || !tree.is_alphabetic() ||
      tree.leaf_count() != 2 * n + 1) {
    throw InvalidInput("fold needs a full alphabetic tree with 2n+1 leaves");
  }

  // One in-order pass. In a full tree leaves and internal nodes alternate, and
  // the internal node between two consecutive leaves is their lowest common
  // ancestor. Around q_i those are LCA(p_{i-1}, q_i) and LCA(q_i, p_i); the
  // shallower one is LCA(p_{i-1}, p_i) and the deeper one is q_i's parent.
  std::vector<CodeTree::NodeId> order;
  std::vector<std::size_t> depth_of(tree.node_count(), 0);
  std::uint64_t visits = 0;
  {
    std::vector<CodeTree::NodeId> stack;
    CodeTree::NodeId cur = tree.root();
    while (cur != CodeTree::kNone || !stack.empty()) {
      while (cur != CodeTree::kNone) {
        stack.push_back(cur);
        CodeTree::NodeId left = tree.node(cur).left;
        if (left != CodeTree::kNone) depth_of[left] = depth_of[cur] + 1;
        cur = left;
      }
      cur = stack.back();
      stack.pop_back();
      ++visits;
      order.push_back(cur);
      CodeTree::NodeId right = tree.node(cur).right;
      if (right != CodeTree::kNone) depth_of[right] = depth_of[cur] + 1;
      cur = right;
    }
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> q_on(tree.node_count(), kUnset);
  std::vector<bool> contracted(tree.node_count(), false);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t pos = 2 * (2 * i - 1);  // q_i is leaf 2i-1, leaves sit at even slots
    CodeTree::NodeId a = order[pos - 1];
    CodeTree::NodeId b = order[pos + 1];
    if (depth_of[a] > depth_of[b]) std::swap(a, b);
    if (q_on[a] != kUnset || contracted[a]) throw ContractViolation("two q's fold onto one node");
    q_on[a] = i;
    contracted[b] = true;
  }

  // Rebuild bottom-up: q leaves vanish and each contracted node is replaced by
  // its remaining child.
  SearchTree out;
  std::vector<SearchTree::NodeId> image(tree.node_count(), SearchTree::kNone);
  std::vector<std::pair<CodeTree::NodeId, bool>> stack{{tree.root(), false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const auto& nd = tree.node(id);
    if (nd.is_leaf()) {
      auto pos = static_cast<std::size_t>(nd.symbol);
      if (pos % 2 == 0) image[id] = out.add_p_leaf(pos / 2);
      continue;
    }
    if (!expanded) {
      stack.emplace_back(id, true);
      stack.emplace_back(nd.right, false);
      stack.emplace_back(nd.left, false);
      continue;
    }
    const SearchTree::NodeId l = image[nd.left];
    const SearchTree::NodeId r = image[nd.right];
    if (contracted[id]) {
      image[id] = l == SearchTree::kNone ? r : l;
    } else {
      if (q_on[id] == kUnset) throw ContractViolation("internal node left without a q label");
      image[id] = out.add_q_node(q_on[id], l, r);
    }
  }
  out.set_root(image[tree.root()]);
  if (stats != nullptr) stats->visits += visits;
  if (!out.is_valid(n)) throw ContractViolation("folded tree is not a valid search tree");
  return out;
}

Rational bst_cost(const SearchTree& tree, const SearchDist& sigma) {
  const std::size_t n = sigma.n();
  if (n == 0) throw InvalidInput("the cost is undefined without internal nodes");
  if (!tree.is_valid(n)) throw InvalidInput("tree is not a valid search tree for sigma");
  Rational cost = 0;
  auto q = tree.q_levels(n);
  auto p = tree.p_parent_levels(n);
  for (std::size_t i = 1; i <= n; ++i) cost += sigma.q(i) * q[i];
  for (std::size_t i = 0; i <= n; ++i) cost += sigma.p(i) * p[i];
  return cost;
}

BstBuild build_bst(const SearchDist& sigma) {
  if (sigma.n() == 0) throw InvalidInput("build_bst needs n >= 1");
  const ProbDist phi = sigma.as_alphabetic();
  AlphabeticBuild alpha = build_alphabetic(phi);
  BstBuild out;
  out.alphabetic_cost = alpha.cost;
  out.tree = fold_to_bst(alpha.tree, sigma, &out.stats);
  out.cost = bst_cost(out.tree, sigma);
  return out;
}

}  // namespace alphatree
