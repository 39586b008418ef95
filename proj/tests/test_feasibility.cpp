#include <gtest/gtest.h>

#include "alphatree/errors.hpp"
#include "alphatree/feasibility.hpp"
#include "support/support.hpp"

namespace alphatree {
namespace {

using testing::r;

std::vector<Rational> as_rationals(const SumSequence& seq) {
  std::vector<Rational> out;
  for (const auto& s : seq.sums) out.push_back(s.to_rational());
  return out;
}

TEST(LengthList, RejectsEmptyAndZero) {
  EXPECT_THROW(LengthList(std::vector<Length>{}), InvalidInput);
  EXPECT_THROW(LengthList({2, 0, 1}), InvalidInput);
}

TEST(SumSequence, WorkedExample) {
  const auto seq = sum_sequence({4, 2, 3, 3});
  EXPECT_EQ(as_rationals(seq), (std::vector<Rational>{r(0), r(1, 4), r(1, 2), r(5, 8)}));
  EXPECT_EQ(seq.alphas, (std::vector<Length>{2, 2, 3}));
}

TEST(SumSequence, UniformTwoBitLists) {
  EXPECT_EQ(sum_sequence({2, 2, 2, 2}).last().to_rational(), r(3, 4));
  EXPECT_EQ(sum_sequence({1}).last().to_rational(), r(0));
  EXPECT_EQ(sum_sequence({2, 2, 3, 3, 3, 3, 3}).last().to_rational(), r(1));
}

TEST(SumSequence, MatchesRationalRecursion) {
  auto rng = testing::make_rng(2);
  std::uniform_int_distribution<std::size_t> size(1, 40);
  std::uniform_int_distribution<Length> len(1, 30);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Length> l(size(rng));
    for (auto& x : l) x = len(rng);
    const auto seq = sum_sequence(LengthList(l));
    ASSERT_EQ(as_rationals(seq), testing::reference_sums(l));
    ASSERT_EQ(final_sum(l), seq.last());
  }
}

TEST(Feasibility, ExamplesFromDefinition) {
  EXPECT_TRUE(is_feasible({1, 2, 2}));
  EXPECT_TRUE(is_feasible({2, 2, 2, 2}));
  EXPECT_TRUE(is_feasible({4, 2, 3, 3}));
  EXPECT_FALSE(is_feasible({1, 1, 1}));
  EXPECT_FALSE(is_feasible({2, 2, 3, 3, 3, 3, 3}));
  EXPECT_TRUE(is_feasible({1}));
}

TEST(Feasibility, AgreesWithShapeSearchExhaustively) {
  for (std::size_t m = 1; m <= 6; ++m) {
    std::vector<Length> l(m, 1);
    while (true) {
      ASSERT_EQ(is_feasible(LengthList(l)), testing::feasible_by_shapes(l));
      std::size_t k = 0;
      while (k < m && l[k] == 6) l[k++] = 1;
      if (k == m) break;
      ++l[k];
    }
  }
}

TEST(NakatsuCode, TenSymbolExampleCodeword) {
  const auto code = nakatsu_code({6, 6, 5, 2, 9, 9, 8, 6, 3, 2});
  EXPECT_EQ(code.codewords[6], "10000001");
  EXPECT_TRUE(code.is_prefix_free());
  EXPECT_TRUE(code.is_ordered());
}

TEST(NakatsuCode, LengthsPrefixFreeAndOrdered) {
  auto rng = testing::make_rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto l = testing::random_feasible_lengths(rng, 1 + trial % 20, 12);
    const auto code = nakatsu_code(LengthList(l));
    ASSERT_EQ(code.size(), l.size());
    for (std::size_t i = 0; i < l.size() && l.size() > 1; ++i) ASSERT_EQ(code.codewords[i].size(), l[i]);
    ASSERT_TRUE(code.is_prefix_free());
    ASSERT_TRUE(code.is_ordered());
  }
}

TEST(NakatsuCode, SingleSymbolAndInfeasible) {
  EXPECT_EQ(nakatsu_code({3}).codewords, std::vector<std::string>{""});
  EXPECT_THROW(nakatsu_code({1, 1, 1}), InvalidInput);
}

TEST(AlphabeticCode, Predicates) {
  AlphabeticCode c{{"0", "10", "11"}};
  EXPECT_TRUE(c.is_prefix_free());
  EXPECT_TRUE(c.is_ordered());
  AlphabeticCode d{{"0", "01"}};
  EXPECT_FALSE(d.is_prefix_free());
  AlphabeticCode e{{"10", "0"}};
  EXPECT_FALSE(e.is_ordered());
}

}  // namespace
}  // namespace alphatree
