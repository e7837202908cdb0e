#pragma once

// Maximal separated subsystems, purity and rank, mutations.
//
// A domain D is pure when all of its inclusion-maximal separated subsystems
// have one size, its rank. Maximal subsystems are the maximal cliques of
// the separation graph on D, which we enumerate exhaustively.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "clique.hpp"
#include "collection.hpp"
#include "necklace.hpp"
#include "regions.hpp"

namespace wsc {

inline constexpr std::size_t kDefaultDomainLimit = 300;

/// r(n-r)+1, the rank of the full Grassmannian.
inline int grassmannian_rank(const GroundContext& ctx)
{
  return ctx.r * (ctx.n - ctx.r) + 1;
}

/// Separation graph on a domain; vertex k is domain[k].
struct SeparationGraph
{
  Collection vertices;
  BitGraph adjacency;

  explicit SeparationGraph(Collection domain)
  : vertices(std::move(domain)), adjacency(vertices.size())
  {
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = a + 1; b < vertices.size(); ++b)
        if (weakly_separated(vertices[a], vertices[b]))
          adjacency.add_edge(a, b);
  }
};

/// Every inclusion-maximal separated subsystem of `domain`, each exactly once,
/// sorted canonically. An empty domain has the single empty maximal subsystem.
inline std::vector<Collection> maximal_separated_collections(const Collection& domain,
                                                             std::size_t limit = kDefaultDomainLimit)
{
  if (domain.size() > limit)
    throw ResourceError("domain has " + std::to_string(domain.size()) + " sets, above the enumeration limit of " +
                        std::to_string(limit) + "; use is_maximal spot checks instead");
  SeparationGraph g(domain);
  std::vector<Collection> out;
  for_each_maximal_clique(g.adjacency, [&](const std::vector<std::size_t>& clique) {
    std::vector<Subset> members;
    members.reserve(clique.size());
    for (std::size_t v : clique)
      members.push_back(domain[v]);
    out.emplace_back(domain.context(), std::move(members));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// No set of `domain - c` is separated from all of `c`.
inline bool is_maximal(const Collection& c, const Collection& domain)
{
  if (!c.is_subset_of(domain))
    throw InputError("is_maximal: collection is not contained in the domain");
  if (!is_separated(c))
    throw InputError("is_maximal: collection is not separated");
  for (const Subset& x : domain)
    if (!c.contains(x) && separated_from_all(x, c))
      return false;
  return true;
}

struct PurityReport
{
  GroundContext context;
  std::size_t domain_size = 0;
  std::vector<Collection> maximal_collections;
  std::vector<int> sizes; // one per maximal collection, ascending
  bool pure = true;
  int rank = 0;
};

inline PurityReport purity_report(const Collection& domain, std::size_t limit = kDefaultDomainLimit)
{
  PurityReport rep;
  rep.context = domain.context();
  rep.domain_size = domain.size();
  rep.maximal_collections = maximal_separated_collections(domain, limit);
  for (const Collection& c : rep.maximal_collections)
    rep.sizes.push_back(static_cast<int>(c.size()));
  std::sort(rep.sizes.begin(), rep.sizes.end());
  rep.pure = rep.sizes.empty() || rep.sizes.front() == rep.sizes.back();
  rep.rank = rep.sizes.empty() ? 0 : rep.sizes.back();
  return rep;
}

// ---------------------------------------------------------------------------
// Mutations

/// Swap of one diagonal of the square Aij, Ajk, Akl, Ali for the other.
/// Elements i < j < k < l are stored ascending, which is a cyclic order.
struct Mutation
{
  Subset base; // A, cardinality r-2
  Element i = 0, j = 0, k = 0, l = 0;
  Subset from;
  Subset to;

  bool operator==(const Mutation&) const = default;
};

namespace detail {

inline Subset add2(const Subset& a, Element x, Element y) { return a.with(x).with(y); }

} // namespace detail

/// Every square with all four sides in `c` and exactly one diagonal present.
/// Sorted by (from, to).
inline std::vector<Mutation> find_mutations(const Collection& c)
{
  std::vector<Mutation> out;
  const int n = c.context().n;
  for (const Subset& x : c) {
    const auto inside = x.elements();
    std::vector<Element> outside;
    for (Element e = 1; e <= n; ++e)
      if (!x.contains(e))
        outside.push_back(e);
    for (std::size_t a = 0; a < inside.size(); ++a)
      for (std::size_t b = a + 1; b < inside.size(); ++b) {
        const Subset base = x.without(inside[a]).without(inside[b]);
        for (std::size_t p = 0; p < outside.size(); ++p)
          for (std::size_t q = p + 1; q < outside.size(); ++q) {
            std::array<Element, 4> quad{inside[a], inside[b], outside[p], outside[q]};
            std::sort(quad.begin(), quad.end());
            // x must be a diagonal: its two elements non-adjacent in the cycle
            const bool diag_ik = x.contains(quad[0]) && x.contains(quad[2]);
            const bool diag_jl = x.contains(quad[1]) && x.contains(quad[3]);
            if (!diag_ik && !diag_jl)
              continue;
            const auto [i, j, k, l] = quad;
            if (!c.contains(detail::add2(base, i, j)) || !c.contains(detail::add2(base, j, k)) ||
                !c.contains(detail::add2(base, k, l)) || !c.contains(detail::add2(base, l, i)))
              continue;
            const Subset other = diag_ik ? detail::add2(base, j, l) : detail::add2(base, i, k);
            if (c.contains(other))
              continue;
            out.push_back(Mutation{base, i, j, k, l, x, other});
          }
      }
  }
  std::sort(out.begin(), out.end(), [](const Mutation& u, const Mutation& v) {
    return std::tie(u.from, u.to) < std::tie(v.from, v.to);
  });
  return out;
}

inline Collection apply_mutation(const Collection& c, const Mutation& m)
{
  const auto options = find_mutations(c);
  if (std::find(options.begin(), options.end(), m) == options.end())
    throw InputError("mutation " + to_literal(m.from) + " -> " + to_literal(m.to) + " does not apply");
  Collection out = c;
  out.erase(m.from);
  out.insert(m.to);
  return out;
}

/// Nodes are the maximal separated collections of a domain; an edge joins
/// two nodes related by a single mutation that stays inside the domain.
struct MutationGraph
{
  std::vector<Collection> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges; // a < b, sorted

  bool connected() const
  {
    if (nodes.size() <= 1)
      return true;
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<bool> seen(nodes.size(), false);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
      std::size_t v = todo.front();
      todo.pop();
      for (std::size_t w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          todo.push(w);
        }
    }
    return reached == nodes.size();
  }
};

inline MutationGraph mutation_graph(const Collection& domain, std::size_t limit = kDefaultDomainLimit)
{
  MutationGraph g;
  g.nodes = maximal_separated_collections(domain, limit);
  std::map<Collection, std::size_t> index;
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    index.emplace(g.nodes[k], k);
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    for (const Mutation& m : find_mutations(g.nodes[k])) {
      if (!domain.contains(m.to))
        continue;
      Collection next = g.nodes[k];
      next.erase(m.from);
      next.insert(m.to);
      auto it = index.find(next);
      if (it != index.end() && k < it->second)
        g.edges.emplace_back(k, it->second);
    }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

inline bool mutation_connected(const Collection& domain, std::size_t limit = kDefaultDomainLimit)
{
  return mutation_graph(domain, limit).connected();
}

/// For a separated collection: whenever Aij, Ajk, Akl, Ali are all present,
/// Aik or Ajl is present too. Returns the first square missing both diagonals.
inline std::optional<Mutation> find_open_square(const Collection& c)
{
  const GroundContext& ctx = c.context();
  if (ctx.r < 2 || ctx.n - ctx.r < 2)
    return std::nullopt;
  std::vector<Subset> bases;
  for (const Subset& x : c) {
    const auto el = x.elements();
    for (std::size_t a = 0; a < el.size(); ++a)
      for (std::size_t b = a + 1; b < el.size(); ++b)
        bases.push_back(x.without(el[a]).without(el[b]));
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  for (const Subset& base : bases) {
    std::vector<Element> free;
    for (Element e = 1; e <= ctx.n; ++e)
      if (!base.contains(e))
        free.push_back(e);
    const std::size_t f = free.size();
    for (std::size_t a = 0; a < f; ++a)
      for (std::size_t b = a + 1; b < f; ++b)
        for (std::size_t p = b + 1; p < f; ++p)
          for (std::size_t q = p + 1; q < f; ++q) {
            Element i = free[a], j = free[b], k = free[p], l = free[q];
            if (c.contains(detail::add2(base, i, j)) && c.contains(detail::add2(base, j, k)) &&
                c.contains(detail::add2(base, k, l)) && c.contains(detail::add2(base, l, i)) &&
                !c.contains(detail::add2(base, i, k)) && !c.contains(detail::add2(base, j, l)))
              return Mutation{base, i, j, k, l, detail::add2(base, i, k), detail::add2(base, j, l)};
          }
  }
  return std::nullopt;
}

/// Extends `start` to a maximal separated subsystem of `domain`, trying the
/// remaining sets in a random order drawn from `rng`.
template <typename Rng>
Collection greedy_completion(const Collection& start, const Collection& domain, Rng& rng)
{
  std::vector<Subset> order(domain.begin(), domain.end());
  std::shuffle(order.begin(), order.end(), rng);
  Collection c = start;
  for (const Subset& x : order)
    if (!c.contains(x) && separated_from_all(x, c))
      c.insert(x);
  return c;
}

// ---------------------------------------------------------------------------
// Single-instance checks of the rank statements

struct RankFormulaReport
{
  Permutation permutation;
  int r = 0;
  int alignments = 0;
  int expected_interior_rank = 0;
  int interior_rank = 0;
  bool interior_pure = true;
  int exterior_rank = 0;
  bool exterior_pure = true;
  bool pass = false;
  std::string witness;
};

/// rk Int(N_pi) = r(n-r)+1 - #alignments and rk Out(N_pi) = #alignments,
/// both computed by enumeration.
inline RankFormulaReport verify_rank_formula(const Permutation& p, std::size_t limit = kDefaultDomainLimit)
{
  RankFormulaReport rep;
  rep.permutation = p;
  const Necklace nk = permutation_to_necklace(p);
  rep.r = nk.r();
  rep.alignments = static_cast<int>(alignments(p).size());
  rep.expected_interior_rank = grassmannian_rank(nk.context()) - rep.alignments;
  const PurityReport in = purity_report(interior(nk), limit);
  const PurityReport out = purity_report(exterior(nk), limit);
  rep.interior_rank = in.rank;
  rep.interior_pure = in.pure;
  rep.exterior_rank = out.rank;
  rep.exterior_pure = out.pure;
  rep.pass = in.pure && out.pure && in.rank == rep.expected_interior_rank && out.rank == rep.alignments;
  if (!rep.pass) {
    rep.witness = "pi=" + to_literal(p);
    if (!in.pure)
      rep.witness += " Int impure, sizes " + std::to_string(in.sizes.front()) + ".." + std::to_string(in.sizes.back());
    if (!out.pure)
      rep.witness += " Out impure, sizes " + std::to_string(out.sizes.front()) + ".." + std::to_string(out.sizes.back());
    rep.witness += " rk(Int)=" + std::to_string(in.rank) + " expected " + std::to_string(rep.expected_interior_rank) +
                   " rk(Out)=" + std::to_string(out.rank) + " expected " + std::to_string(rep.alignments);
  }
  return rep;
}

struct SystemRank
{
  std::size_t size = 0;
  bool pure = true;
  int rank = 0;
};

inline SystemRank rank_of(const Collection& domain, std::size_t limit = kDefaultDomainLimit)
{
  const PurityReport rep = purity_report(domain, limit);
  return {domain.size(), rep.pure, rep.rank};
}

/// Purity of the four cells cut out by two separated necklaces, and the
/// ring / union special cases.
struct TwoNecklaceReport
{
  bool applicable = false; // N1 || N2
  SystemRank in_in, in_out, out_in, out_out;
  int rank_sum = 0;
  int expected_sum = 0;

  bool less = false; // N1 less than N2
  SystemRank ring;   // I2 n O1
  int expected_ring_rank = 0;

  bool union_case = false; // I1 || N2 and I2 || N1
  SystemRank union_rank;
  int expected_union_rank = 0;
  bool disjoint_interiors = false;
  int expected_disjoint_sum = 0;

  bool pass = true;
  std::string witness;
};

inline TwoNecklaceReport verify_two_necklaces(const Necklace& n1, const Necklace& n2, std::size_t limit = kDefaultDomainLimit)
{
  TwoNecklaceReport rep;
  if (n1.context() != n2.context())
    throw InputError("verify_two_necklaces: necklaces over different contexts");
  const Collection c1 = n1.as_collection();
  const Collection c2 = n2.as_collection();
  rep.applicable = separated_from(c1, c2);
  if (!rep.applicable)
    return rep;

  const Collection i1 = interior(n1), o1 = exterior(n1);
  const Collection i2 = interior(n2), o2 = exterior(n2);
  rep.in_in = rank_of(set_intersection(i1, i2), limit);
  rep.in_out = rank_of(set_intersection(i1, o2), limit);
  rep.out_in = rank_of(set_intersection(o1, i2), limit);
  rep.out_out = rank_of(set_intersection(o1, o2), limit);
  rep.rank_sum = rep.in_in.rank + rep.in_out.rank + rep.out_in.rank + rep.out_out.rank;
  rep.expected_sum = grassmannian_rank(n1.context());

  auto fail = [&](const std::string& why) {
    rep.pass = false;
    if (!rep.witness.empty())
      rep.witness += "; ";
    rep.witness += why;
  };
  if (!rep.in_in.pure || !rep.in_out.pure || !rep.out_in.pure || !rep.out_out.pure)
    fail("an intersection system is impure");
  if (rep.rank_sum != rep.expected_sum)
    fail("rank sum " + std::to_string(rep.rank_sum) + " != " + std::to_string(rep.expected_sum));

  rep.less = is_less(n1, n2);
  if (rep.less) {
    rep.ring = rep.out_in;
    const SystemRank r_i1 = rank_of(i1, limit);
    const SystemRank r_o2 = rank_of(o2, limit);
    rep.expected_ring_rank = rep.expected_sum - r_i1.rank - r_o2.rank;
    if (!i1.is_subset_of(i2) || !o2.is_subset_of(o1))
      fail("less-than order without I1 in I2 and O2 in O1");
    if (!rep.ring.pure || rep.ring.rank != rep.expected_ring_rank)
      fail("ring rank " + std::to_string(rep.ring.rank) + " != " + std::to_string(rep.expected_ring_rank));
  }

  rep.union_case = separated_from(i1, c2) && separated_from(i2, c1);
  if (rep.union_case) {
    rep.union_rank = rank_of(set_union(i1, i2), limit);
    rep.expected_union_rank = rep.in_in.rank + rep.in_out.rank + rep.out_in.rank;
    if (!rep.union_rank.pure || rep.union_rank.rank != rep.expected_union_rank)
      fail("I1 u I2 rank " + std::to_string(rep.union_rank.rank) + " != " + std::to_string(rep.expected_union_rank));
    rep.disjoint_interiors = set_intersection(i1, i2).empty();
    if (rep.disjoint_interiors) {
      rep.expected_disjoint_sum = rank_of(i1, limit).rank + rank_of(i2, limit).rank;
      if (rep.union_rank.rank != rep.expected_disjoint_sum)
        fail("disjoint interiors: rank not additive");
    }
  }
  if (!rep.pass) {
    std::string a, b;
    for (const Subset& s : n1.sets())
      a += to_literal(s) + " ";
    for (const Subset& s : n2.sets())
      b += to_literal(s) + " ";
    rep.witness = "N1=(" + a + ") N2=(" + b + "): " + rep.witness;
  }
  return rep;
}

struct RestrictionReport
{
  std::uint64_t seed = 0;
  int trials = 0;
  bool exhaustive = false;
  int checked = 0;
  bool pass = true;
  std::string witness;
};

namespace detail {

inline bool restriction_maximal(const Collection& c, const Collection& in, std::string& witness)
{
  const Collection restricted = set_intersection(c, in);
  if (is_maximal(restricted, in))
    return true;
  witness = "C =";
  for (const Subset& s : c)
    witness += " " + to_literal(s);
  witness += " restricts to a non-maximal system of Int(N)";
  return false;
}

} // namespace detail

/// Samples `trials` maximal Grassmannian collections containing N (seeded
/// random greedy completion) and checks each restriction to Int(N) is maximal there.
inline RestrictionReport verify_restriction(const Necklace& nk, int trials, std::uint64_t seed)
{
  RestrictionReport rep;
  rep.seed = seed;
  rep.trials = trials;
  const Collection in = interior(nk);
  const Collection gr = full_grassmannian(nk.context());
  const Collection start = nk.as_collection();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Collection c = greedy_completion(start, gr, rng);
    ++rep.checked;
    if (!detail::restriction_maximal(c, in, rep.witness)) {
      rep.pass = false;
      break;
    }
  }
  return rep;
}

/// Exhaustive variant over a precomputed list of all maximal Grassmannian collections.
inline RestrictionReport verify_restriction_exhaustive(const Necklace& nk,
                                                           const std::vector<Collection>& grassmannian_maximal)
{
  RestrictionReport rep;
  rep.exhaustive = true;
  const Collection in = interior(nk);
  const Collection start = nk.as_collection();
  for (const Collection& c : grassmannian_maximal) {
    if (!start.is_subset_of(c))
      continue;
    ++rep.checked;
    if (!detail::restriction_maximal(c, in, rep.witness)) {
      rep.pass = false;
      break;
    }
  }
  rep.trials = rep.checked;
  return rep;
}

} // namespace wsc
