#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace wsc;
using wsc::test::S;

TEST(CyclicOrder, Examples)
{
  EXPECT_TRUE(cyclic_less(CyclicShift{1}, 2, 4, 4));
  EXPECT_TRUE(cyclic_less(CyclicShift{2}, 4, 1, 4));
  EXPECT_FALSE(cyclic_less(CyclicShift{3}, 2, 3, 4));
  EXPECT_FALSE(cyclic_less(CyclicShift{2}, 3, 3, 4));
  EXPECT_TRUE(cyclic_less_equal(CyclicShift{2}, 3, 3, 4));
}

TEST(CyclicOrder, IsStrictTotalOrder)
{
  for (int n = 1; n <= 7; ++n)
    for (int i = 1; i <= n; ++i)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          if (a == b) {
            EXPECT_FALSE(cyclic_less(CyclicShift{i}, a, b, n));
          } else {
            EXPECT_NE(cyclic_less(CyclicShift{i}, a, b, n), cyclic_less(CyclicShift{i}, b, a, n));
          }
          if (a != i) {
            EXPECT_TRUE(cyclic_less(CyclicShift{i}, i, a, n));
          }
        }
}

TEST(CyclicOrder, RejectsOutOfRange)
{
  EXPECT_THROW(cyclic_less(CyclicShift{5}, 1, 2, 4), InputError);
  EXPECT_THROW(cyclic_less(CyclicShift{1}, 0, 2, 4), InputError);
  EXPECT_THROW(cyclic_less(CyclicShift{1}, 1, 5, 4), InputError);
}

TEST(Dominance, Examples)
{
  EXPECT_TRUE(dominates(S("12", 4), S("34", 4), CyclicShift{1}));
  EXPECT_TRUE(dominates(S("24", 4), S("12", 4), CyclicShift{2}));
  EXPECT_TRUE(dominates(S("12", 4), S("12", 4), CyclicShift{3}));
  EXPECT_FALSE(dominates(S("34", 4), S("12", 4), CyclicShift{1}));
}

TEST(Dominance, MismatchedInputs)
{
  EXPECT_THROW(dominates(S("12", 4), S("12", 5), CyclicShift{1}), InputError);
  EXPECT_THROW(dominates(S("12", 4), S("123", 4), CyclicShift{1}), InputError);
  EXPECT_THROW(dominates(S("12", 4), S("13", 4), CyclicShift{0}), InputError);
}

TEST(WeakSeparation, Examples)
{
  EXPECT_TRUE(weakly_separated(S("12", 4), S("12", 4)));
  EXPECT_FALSE(weakly_separated(S("13", 4), S("24", 4)));
  EXPECT_TRUE(weakly_separated(S("126", 7), S("467", 7)));
  EXPECT_TRUE(weakly_separated(S("{}", 3), S("{}", 3)));
}

TEST(WeakSeparation, RejectsDifferentCardinality)
{
  EXPECT_THROW(weakly_separated(S("1", 4), S("12", 4)), InputError);
  EXPECT_THROW(weakly_separated(S("12", 4), S("12", 6)), InputError);
}

// Run counting agrees with the quantifier over all starts, and is symmetric.
TEST(WeakSeparation, MatchesDefinitionExhaustively)
{
  for (int n = 1; n <= 8; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto all = grassmannian(GroundContext(n, r));
      for (const Subset& x : all)
        for (const Subset& y : all) {
          const bool fast = weakly_separated(x, y);
          ASSERT_EQ(fast, weakly_separated_naive(x, y)) << to_literal(x) << " " << to_literal(y);
          ASSERT_EQ(fast, weakly_separated(y, x));
        }
    }
}

TEST(WeakSeparation, InvariantUnderRotationAndComplement)
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const int r = static_cast<int>(rng() % (n + 1));
    auto pick = [&] {
      std::vector<Element> e(n);
      for (int k = 0; k < n; ++k)
        e[k] = k + 1;
      std::shuffle(e.begin(), e.end(), rng);
      e.resize(r);
      return Subset::of(e, n);
    };
    const Subset x = pick(), y = pick();
    auto rot = [&](const Subset& s) {
      std::vector<Element> e;
      for (Element v : s.elements())
        e.push_back(v % n + 1);
      return Subset::of(e, n);
    };
    EXPECT_EQ(weakly_separated(x, y), weakly_separated(rot(x), rot(y)));
    EXPECT_EQ(weakly_separated(x, y), weakly_separated(x.complement(), y.complement()));
    EXPECT_EQ(weakly_separated(x, y), weakly_separated_naive(x, y));
  }
}

// X <<_i Y <<_i Z and X || Z give X <<_i Z.
TEST(Dominance, TransitiveOnSeparatedTriples)
{
  for (int n = 1; n <= 5; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto all = grassmannian(GroundContext(n, r));
      for (int i = 1; i <= n; ++i)
        for (const Subset& x : all)
          for (const Subset& y : all)
            for (const Subset& z : all)
              if (dominates(x, y, CyclicShift{i}) && dominates(y, z, CyclicShift{i}) && weakly_separated(x, z)) {
                ASSERT_TRUE(dominates(x, z, CyclicShift{i}));
              }
    }
}

TEST(Neighbors, Examples)
{
  EXPECT_TRUE(neighbors(S("12", 4), S("13", 4)));
  EXPECT_FALSE(neighbors(S("12", 4), S("34", 4)));
  EXPECT_TRUE(neighbors(S("127", 7), S("123", 7)));
  EXPECT_FALSE(neighbors(S("12", 4), S("12", 4)));
}

TEST(CyclicInterval, Examples)
{
  const GroundContext ctx(4, 2);
  EXPECT_EQ(cyclic_interval(3, 2, ctx), S("34", 4));
  EXPECT_EQ(cyclic_interval(4, 2, ctx), S("14", 4));
  EXPECT_TRUE(cyclic_interval(1, 0, ctx).empty());
  EXPECT_EQ(cyclic_interval(2, 4, ctx), Subset::full(4));
  EXPECT_THROW(cyclic_interval(5, 1, ctx), InputError);
  EXPECT_THROW(cyclic_interval(1, 5, ctx), InputError);
}

TEST(Grassmannian, SizesAndOrder)
{
  EXPECT_EQ(grassmannian(GroundContext(4, 2)).size(), 6u);
  EXPECT_EQ(grassmannian(GroundContext(7, 3)).size(), 35u);
  EXPECT_EQ(grassmannian(GroundContext(5, 0)).size(), 1u);
  const auto g = grassmannian(GroundContext(6, 3));
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  EXPECT_EQ(to_literal(g.front()), "123");
  EXPECT_EQ(to_literal(g.back()), "456");
}

TEST(GroundContext, Validation)
{
  EXPECT_THROW(GroundContext(0, 0), InputError);
  EXPECT_THROW(GroundContext(33, 1), InputError);
  EXPECT_THROW(GroundContext(4, 5), InputError);
  EXPECT_THROW(GroundContext(4, -1), InputError);
  EXPECT_NO_THROW(GroundContext(32, 16));
}

TEST(Literals, RoundTrip)
{
  EXPECT_EQ(to_literal(S("721", 7)), "127");
  EXPECT_EQ(to_literal(S("{}", 4)), "{}");
  EXPECT_EQ(to_literal(S("1,2,12", 12)), "1,2,12");
  EXPECT_EQ(S("12", 12), Subset::of({12}, 12));
  EXPECT_EQ(S("3, 5", 9), S("35", 9));
  for (int n : {3, 9, 10, 20, 32})
    for (const Subset& s : grassmannian(GroundContext(n, std::min(n, 2))))
      EXPECT_EQ(parse_subset(to_literal(s), n), s);
}

TEST(Literals, Errors)
{
  EXPECT_THROW(S("", 4), InputError);
  EXPECT_THROW(S("15", 4), InputError);
  EXPECT_THROW(S("11", 4), InputError);
  EXPECT_THROW(S("1a", 4), InputError);
  EXPECT_THROW(S("1,,2", 12), InputError);
  EXPECT_THROW(S("0", 4), InputError);
}

TEST(SubsetOps, Basics)
{
  const Subset x = S("124", 5), y = S("235", 5);
  EXPECT_EQ(x - y, S("14", 5));
  EXPECT_EQ(x | y, S("12345", 5));
  EXPECT_EQ(x & y, S("2", 5));
  EXPECT_EQ(x.complement(), S("35", 5));
  EXPECT_TRUE(S("2", 5).is_subset_of(x));
  EXPECT_EQ(x.with(5).without(1), S("245", 5));
  EXPECT_LT(S("123", 5), S("124", 5));
  EXPECT_LT(S("125", 5), S("134", 5));
  EXPECT_THROW(Subset::from_mask(0b10000, 4), InputError);
}
