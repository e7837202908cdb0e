#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace wsc;
using wsc::test::C;
using wsc::test::literals;
using wsc::test::N;
using wsc::test::P;
using wsc::test::S;

using Lits = std::vector<std::string>;

TEST(Regions, LargestNecklace)
{
  const Necklace top = largest_necklace(GroundContext(4, 2));
  EXPECT_EQ(separated_fan(top).size(), 6u);
  EXPECT_EQ(interior(top).size(), 6u);
  EXPECT_TRUE(exterior(top).empty());
}

TEST(Regions, OneAlignment)
{
  const Necklace nk = N({"12", "24", "34", "14"});
  EXPECT_EQ(literals(separated_fan(nk)), (Lits{"12", "14", "23", "24", "34"}));
  EXPECT_EQ(literals(interior(nk)), (Lits{"12", "14", "24", "34"}));
  EXPECT_EQ(literals(exterior(nk)), (Lits{"23"}));
}

TEST(Regions, DummiesRejectedByDefault)
{
  const Necklace nk = N({"1", "1", "1"});
  EXPECT_THROW(interior(nk), PreconditionError);
  EXPECT_THROW(exterior(nk), PreconditionError);
  EXPECT_THROW(separated_fan(nk), PreconditionError);
  EXPECT_NO_THROW(interior(nk, DummyPolicy::allow));
}

// Empty necklaces (r = 0) consist of dummies only; the permissive policy
// still evaluates the formulas, giving Int = {{}} and Out = {}.
TEST(Regions, EmptyNecklacePermissive)
{
  const Necklace nk = N({"{}", "{}"});
  EXPECT_EQ(interior(nk, DummyPolicy::allow).size(), 1u);
  EXPECT_TRUE(exterior(nk, DummyPolicy::allow).empty());
}

TEST(Regions, StructuralInvariants)
{
  for (int n = 1; n <= 6; ++n)
    for (const Necklace& nk : all_necklaces(n)) {
      const Collection fan = separated_fan(nk), in = interior(nk), out = exterior(nk);
      const Collection members = nk.as_collection();
      ASSERT_TRUE(members.is_subset_of(fan));
      ASSERT_TRUE(members.is_subset_of(in));
      ASSERT_TRUE(separated_from(members, in));
      ASSERT_TRUE(set_intersection(in, out).empty());
      ASSERT_EQ(set_union(in, out), fan);
      ASSERT_TRUE(separated_from(in, out)) << to_literal(members);
    }
}

TEST(Chambers, Examples)
{
  const Permutation p = P("4,3,1,2");
  EXPECT_FALSE(is_chamber_set(S("23", 4), p));
  EXPECT_TRUE(is_chamber_set(S("24", 4), p));
  for (const Subset& x : grassmannian(GroundContext(5, 2)))
    EXPECT_TRUE(is_chamber_set(x, Permutation::rotation(5, 2)));
  EXPECT_THROW(is_chamber_set(S("2", 4), p), InputError);
  EXPECT_THROW(is_chamber_set(S("24", 5), p), InputError);

  EXPECT_EQ(interior_chamber(Permutation::rotation(4, 2)).size(), 6u);
  EXPECT_EQ(literals(interior_chamber(p)), (Lits{"12", "14", "24", "34"}));
}

TEST(Chambers, EqualInteriorEverywhere)
{
  for (int n = 1; n <= 6; ++n) {
    std::vector<Element> im(n);
    for (int k = 0; k < n; ++k)
      im[k] = k + 1;
    do {
      const Permutation p(im);
      ASSERT_EQ(interior(permutation_to_necklace(p)), interior_chamber(p)) << to_literal(p);
    } while (std::next_permutation(im.begin(), im.end()));
  }
}

TEST(Regions, MembershipSinglePoint)
{
  const Necklace nk = N({"12", "24", "34", "14"});
  EXPECT_TRUE(in_interior(nk, S("24", 4)));
  EXPECT_FALSE(in_interior(nk, S("23", 4)));
  EXPECT_TRUE(in_separated_fan(nk, S("23", 4)));
  EXPECT_FALSE(in_separated_fan(nk, S("13", 4)));
  EXPECT_FALSE(in_interior(nk, S("2", 4)));
}
