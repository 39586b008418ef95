#include <gtest/gtest.h>

#include <algorithm>

#include "alphatree/errors.hpp"
#include "alphatree/treebuild.hpp"
#include "support/support.hpp"

namespace alphatree {
namespace {

TEST(TIndex, SmallExample) {
  // sums 0, .01, .1, .101
  const auto seq = sum_sequence({4, 2, 3, 3});
  EXPECT_EQ(t_index(seq, 0, 3), 1u);
  EXPECT_EQ(t_index(seq, 2, 3), 3u);
  EXPECT_EQ(t_index(seq, 0, 1), 2u);
}

TEST(TIndex, MatchesAdjacentBitScan) {
  auto rng = testing::make_rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto l = testing::random_feasible_lengths(rng, 2 + trial % 25, 14);
    const auto seq = sum_sequence(LengthList(l));
    const auto ref = testing::reference_sums(l);
    std::uniform_int_distribution<std::size_t> pick(0, l.size() - 1);
    for (int q = 0; q < 10; ++q) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      ASSERT_EQ(t_index(seq, i, j), testing::scan_t_index(ref, i, j));
    }
  }
}

TEST(SplitIndex, MatchesLinearScan) {
  auto rng = testing::make_rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto l = testing::random_feasible_lengths(rng, 2 + trial % 40, 16);
    const auto seq = sum_sequence(LengthList(l));
    const auto ref = testing::reference_sums(l);
    std::uniform_int_distribution<std::size_t> pick(0, l.size() - 1);
    for (int q = 0; q < 10; ++q) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      const Length t = t_index(seq, i, j);
      ASSERT_EQ(split_index(seq, i, j, t), testing::scan_split(ref, i, j, t));
    }
  }
}

TEST(SplitIndex, RejectsWrongT) {
  const auto seq = sum_sequence({4, 2, 3, 3});
  EXPECT_THROW(split_index(seq, 0, 3, 2), InvalidInput);
}

TEST(SplitIndex, ProbesLogarithmicInSmallerSide) {
  // All splits land next to i: the gallop from the near end stays short.
  std::vector<Length> l{1};
  for (int i = 0; i < 1000; ++i) l.push_back(30);
  const auto seq = sum_sequence(LengthList(l));
  ProbeCounter counter;
  split_index(seq, 0, l.size() - 1, t_index(seq, 0, l.size() - 1), &counter);
  EXPECT_LE(counter.probes, 6u);
}

TEST(ConstructTree, TenSymbolExample) {
  const LengthList l{6, 6, 5, 2, 9, 9, 8, 6, 3, 2};
  const auto tree = construct_tree(l);
  ASSERT_TRUE(tree.is_full());
  ASSERT_TRUE(tree.is_alphabetic());
  EXPECT_EQ(tree.codewords().codewords[6], "10001");
  const auto d = tree.depths();
  for (std::size_t i = 0; i < l.size(); ++i) EXPECT_LE(d[i], std::min<std::size_t>(l[i], 9));
}

TEST(ConstructTree, DepthsWithinLengthsOnRandomLists) {
  auto rng = testing::make_rng(6);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto l = testing::random_feasible_lengths(rng, 1 + trial % 30, 20);
    const auto tree = construct_tree(LengthList(l));
    ASSERT_TRUE(tree.is_full());
    ASSERT_TRUE(tree.is_alphabetic());
    ASSERT_EQ(tree.leaf_count(), l.size());
    const auto d = tree.depths();
    for (std::size_t i = 0; i < l.size(); ++i) {
      ASSERT_LE(d[i], std::min<std::size_t>(l[i], l.size() - 1));
    }
  }
}

TEST(ConstructTree, SingleSymbolAndInfeasible) {
  const auto tree = construct_tree({5});
  EXPECT_EQ(tree.leaf_count(), 1u);
  EXPECT_EQ(tree.depths(), std::vector<std::size_t>{0});
  EXPECT_THROW(construct_tree({1, 1, 1}), InvalidInput);
}

TEST(ConstructTree, CountsSplitsAboveCherries) {
  // Ranges of one or two leaves need no search.
  ProbeCounter counter;
  construct_tree({3, 3, 3, 3, 3, 3, 3}, &counter);
  EXPECT_GE(counter.splits, 1u);
  EXPECT_LE(counter.splits, 5u);
  EXPECT_GE(counter.probes, counter.splits);
}

TEST(CodeTree, StructureQueries) {
  CodeTree t;
  const auto a = t.add_leaf(0), b = t.add_leaf(1), c = t.add_leaf(2);
  t.set_root(t.add_internal(a, t.add_internal(b, c)));
  EXPECT_EQ(t.in_order_symbols(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(t.depths(), (std::vector<std::size_t>{1, 2, 2}));
  EXPECT_EQ(t.codewords().codewords, (std::vector<std::string>{"0", "10", "11"}));
  EXPECT_TRUE(t.is_full());
  EXPECT_TRUE(t.is_alphabetic());

  CodeTree u;
  const auto x = u.add_leaf(1), y = u.add_leaf(0), z = u.add_leaf(2);
  u.set_root(u.add_internal(x, u.add_internal(y, z)));
  EXPECT_FALSE(u.is_alphabetic());
  EXPECT_FALSE(t == u);
}

}  // namespace
}  // namespace alphatree
