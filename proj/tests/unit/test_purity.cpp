#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

using namespace wsc;
using wsc::test::C;
using wsc::test::literals;
using wsc::test::N;
using wsc::test::P;
using wsc::test::S;

using Lits = std::vector<std::string>;

TEST(Cliques, TriangleAndEmpty)
{
  BitGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  std::vector<std::vector<std::size_t>> found;
  for_each_maximal_clique(g, [&](const std::vector<std::size_t>& c) { found.push_back(c); });
  std::sort(found.begin(), found.end());
  EXPECT_EQ(found, (std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}}));

  found.clear();
  for_each_maximal_clique(BitGraph(0), [&](const std::vector<std::size_t>& c) { found.push_back(c); });
  ASSERT_EQ(found.size(), 1u);
  EXPECT_TRUE(found.front().empty());
}

TEST(MaximalCollections, GrassmannianFourTwo)
{
  const auto all = maximal_separated_collections(full_grassmannian(GroundContext(4, 2)));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(literals(all[0]), (Lits{"12", "13", "14", "23", "34"}));
  EXPECT_EQ(literals(all[1]), (Lits{"12", "14", "23", "24", "34"}));
}

TEST(MaximalCollections, NecklaceDomain)
{
  const Necklace nk = N({"12", "24", "34", "14"});
  const auto from_necklace = maximal_separated_collections(nk.as_collection());
  ASSERT_EQ(from_necklace.size(), 1u);
  EXPECT_EQ(from_necklace.front(), nk.as_collection());
  const auto in = maximal_separated_collections(interior(nk));
  ASSERT_EQ(in.size(), 1u);
  EXPECT_EQ(in.front().size(), 4u);
}

// Counts per (n, r) from an independent clique enumeration (networkx).
TEST(MaximalCollections, CountsMatchOracle)
{
  const std::map<std::pair<int, int>, std::size_t> expected = {
    {{4, 2}, 2},  {{5, 2}, 5},  {{5, 3}, 5},   {{6, 2}, 14},  {{6, 3}, 34},
    {{6, 4}, 14}, {{7, 2}, 42}, {{7, 3}, 259}, {{7, 4}, 259}, {{7, 5}, 42},
  };
  for (const auto& [key, count] : expected) {
    const GroundContext ctx(key.first, key.second);
    const auto all = maximal_separated_collections(full_grassmannian(ctx));
    EXPECT_EQ(all.size(), count) << key.first << "," << key.second;
    for (const Collection& c : all)
      EXPECT_EQ(static_cast<int>(c.size()), grassmannian_rank(ctx));
  }
}

TEST(MaximalCollections, EmptyDomainHasEmptyMaximum)
{
  const auto rep = purity_report(Collection(GroundContext(4, 2)));
  EXPECT_TRUE(rep.pure);
  EXPECT_EQ(rep.rank, 0);
  EXPECT_EQ(rep.maximal_collections.size(), 1u);
}

TEST(MaximalCollections, DomainLimit)
{
  EXPECT_THROW(maximal_separated_collections(full_grassmannian(GroundContext(12, 6)), 300), ResourceError);
  EXPECT_THROW(purity_report(full_grassmannian(GroundContext(7, 3)), 10), ResourceError);
}

TEST(IsMaximal, Examples)
{
  const Collection gr = full_grassmannian(GroundContext(4, 2));
  EXPECT_TRUE(is_maximal(C(4, 2, {"12", "23", "34", "14", "13"}), gr));
  EXPECT_FALSE(is_maximal(C(4, 2, {"12", "23"}), gr));
  EXPECT_THROW(is_maximal(C(4, 2, {"13", "24"}), gr), InputError);
  EXPECT_THROW(is_maximal(C(4, 2, {"13"}), C(4, 2, {"12"})), InputError);
  EXPECT_TRUE(is_maximal(wsc::test::heptagon_collection(), full_grassmannian(GroundContext(7, 3))));
}

TEST(Purity, Reports)
{
  const auto gr = purity_report(full_grassmannian(GroundContext(4, 2)));
  EXPECT_TRUE(gr.pure);
  EXPECT_EQ(gr.rank, 5);
  EXPECT_EQ(gr.sizes, (std::vector<int>{5, 5}));

  const Necklace nk = N({"12", "24", "34", "14"});
  const auto in = purity_report(interior(nk));
  EXPECT_TRUE(in.pure);
  EXPECT_EQ(in.rank, 4);
  const auto out = purity_report(exterior(nk));
  EXPECT_TRUE(out.pure);
  EXPECT_EQ(out.rank, 1);
}

TEST(Purity, DetectsImpureDomain)
{
  // 13 crosses both 24 and 25, which are separated from each other
  const auto rep = purity_report(C(5, 2, {"13", "24", "25"}));
  EXPECT_FALSE(rep.pure);
  EXPECT_EQ(rep.sizes, (std::vector<int>{1, 2}));
  EXPECT_EQ(rep.rank, 2);
}

TEST(Mutations, FindAndApply)
{
  const Collection c = C(4, 2, {"12", "23", "34", "14", "13"});
  const auto found = find_mutations(c);
  ASSERT_EQ(found.size(), 1u);
  const Mutation& m = found.front();
  EXPECT_TRUE(m.base.empty());
  EXPECT_EQ(std::tuple(m.i, m.j, m.k, m.l), std::tuple(1, 2, 3, 4));
  EXPECT_EQ(m.from, S("13", 4));
  EXPECT_EQ(m.to, S("24", 4));

  const Collection next = apply_mutation(c, m);
  EXPECT_EQ(literals(next), (Lits{"12", "14", "23", "24", "34"}));
  EXPECT_EQ(next.size(), c.size());
  const auto back = find_mutations(next);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(apply_mutation(next, back.front()), c);

  EXPECT_TRUE(find_mutations(largest_necklace(GroundContext(5, 2)).as_collection()).empty());
  EXPECT_THROW(apply_mutation(largest_necklace(GroundContext(4, 2)).as_collection(), m), InputError);
}

TEST(Mutations, PreserveSeparationAndMaximality)
{
  for (int n = 4; n <= 6; ++n)
    for (int r = 2; r <= n - 2; ++r) {
      const Collection gr = full_grassmannian(GroundContext(n, r));
      for (const Collection& c : maximal_separated_collections(gr))
        for (const Mutation& m : find_mutations(c)) {
          const Collection next = apply_mutation(c, m);
          ASSERT_TRUE(is_separated(next));
          ASSERT_TRUE(is_maximal(next, gr));
        }
    }
}

TEST(Mutations, NoOpenSquaresInMaximalCollections)
{
  for (int n = 4; n <= 6; ++n)
    for (int r = 1; r < n; ++r)
      for (const Collection& c : maximal_separated_collections(full_grassmannian(GroundContext(n, r))))
        ASSERT_FALSE(find_open_square(c).has_value()) << to_literal(c);
  // dropping a diagonal opens its square
  EXPECT_TRUE(find_open_square(C(4, 2, {"12", "23", "34", "14"})).has_value());
}

TEST(MutationGraph, Examples)
{
  const MutationGraph g = mutation_graph(full_grassmannian(GroundContext(4, 2)));
  EXPECT_EQ(g.nodes.size(), 2u);
  EXPECT_EQ(g.edges.size(), 1u);
  EXPECT_TRUE(g.connected());
  EXPECT_TRUE(mutation_connected(interior(N({"12", "24", "34", "14"}))));
}

TEST(MutationGraph, CatalanForTwoSubsets)
{
  const std::size_t expected[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 3; n <= 8; ++n) {
    const MutationGraph g = mutation_graph(full_grassmannian(GroundContext(n, 2)));
    EXPECT_EQ(g.nodes.size(), expected[n - 2]) << n;
    EXPECT_EQ(g.nodes.size(), count_polygon_triangulations(n));
    EXPECT_EQ(g.nodes.size(), catalan(n - 2));
    EXPECT_TRUE(g.connected());
  }
}

TEST(MutationGraph, InteriorsConnected)
{
  for (int n = 1; n <= 6; ++n)
    for (const Necklace& nk : all_necklaces(n))
      ASSERT_TRUE(mutation_connected(interior(nk))) << to_literal(nk.as_collection());
}

TEST(RankFormula, Examples)
{
  const auto rot = verify_rank_formula(Permutation::rotation(5, 2));
  EXPECT_TRUE(rot.pass);
  EXPECT_EQ(rot.interior_rank, 7);
  EXPECT_EQ(rot.exterior_rank, 0);

  const auto one = verify_rank_formula(P("4,3,1,2"));
  EXPECT_TRUE(one.pass);
  EXPECT_EQ(one.interior_rank, 4);
  EXPECT_EQ(one.exterior_rank, 1);
  EXPECT_EQ(one.alignments, 1);
}

TEST(RankFormula, AllPermutationsUpToSix)
{
  for (int n = 1; n <= 6; ++n)
    for (const Permutation& p : all_permutations(n)) {
      const auto rep = verify_rank_formula(p);
      ASSERT_TRUE(rep.pass) << rep.witness;
    }
}

TEST(TwoNecklaces, Examples)
{
  const Necklace a = N({"12", "24", "34", "14"});
  const Necklace top = largest_necklace(GroundContext(4, 2));

  const auto self = verify_two_necklaces(a, a);
  EXPECT_TRUE(self.applicable);
  EXPECT_TRUE(self.pass) << self.witness;
  EXPECT_EQ(self.in_out.rank, 0);
  EXPECT_EQ(self.in_in.rank + self.out_out.rank, 5);

  const auto ring = verify_two_necklaces(a, top);
  EXPECT_TRUE(ring.pass) << ring.witness;
  EXPECT_TRUE(ring.less);
  EXPECT_EQ(ring.expected_ring_rank, 1);
  EXPECT_EQ(ring.ring.rank, 1);
}

TEST(TwoNecklaces, AllSeparatedPairsUpToFive)
{
  std::size_t applicable = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto all = all_necklaces(n);
    for (const Necklace& a : all)
      for (const Necklace& b : all) {
        if (a.context() != b.context())
          continue;
        const auto rep = verify_two_necklaces(a, b);
        applicable += rep.applicable;
        ASSERT_TRUE(!rep.applicable || rep.pass) << rep.witness;
      }
  }
  EXPECT_GT(applicable, 0u);
}

TEST(Restriction, Examples)
{
  const auto top = verify_restriction(largest_necklace(GroundContext(5, 2)), 20, 3);
  EXPECT_TRUE(top.pass);
  EXPECT_EQ(top.checked, 20);

  const Necklace a = N({"12", "24", "34", "14"});
  const auto all = maximal_separated_collections(full_grassmannian(GroundContext(4, 2)));
  const auto ex = verify_restriction_exhaustive(a, all);
  EXPECT_TRUE(ex.pass);
  EXPECT_EQ(ex.checked, 1); // only {12,14,23,24,34} contains the necklace
}

TEST(Restriction, ExhaustiveUpToFive)
{
  for (int n = 1; n <= 5; ++n) {
    std::map<int, std::vector<Collection>> by_r;
    for (int r = 0; r <= n; ++r)
      by_r[r] = maximal_separated_collections(full_grassmannian(GroundContext(n, r)));
    for (const Necklace& nk : all_necklaces(n)) {
      const auto rep = verify_restriction_exhaustive(nk, by_r[nk.r()]);
      ASSERT_TRUE(rep.pass) << rep.witness;
      ASSERT_GT(rep.checked, 0);
    }
  }
}

TEST(Restriction, SeededSamplingIsDeterministic)
{
  const Necklace nk = permutation_to_necklace(P("3,5,1,6,2,4"));
  const auto a = verify_restriction(nk, 50, 11);
  const auto b = verify_restriction(nk, 50, 11);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(GreedyCompletion, AlwaysMaximal)
{
  std::mt19937_64 rng(5);
  const Collection gr = full_grassmannian(GroundContext(6, 3));
  for (int t = 0; t < 50; ++t) {
    const Collection c = greedy_completion(Collection(gr.context()), gr, rng);
    ASSERT_TRUE(is_maximal(c, gr));
    ASSERT_EQ(c.size(), 10u);
  }
}
