#pragma once

// Property checks for generalized necklaces.
//
// Generalized necklaces are enumerated as simple cycles of the neighbor graph
// of C(n, r) whose vertices are pairwise separated and whose embedded curve is
// simple. A cycle is listed once per cyclic rotation class; its reversal is a
// different sequence and is listed separately.
//
// Outcomes are reported, never asserted: a counterexample is data.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "collection.hpp"
#include "errors.hpp"
#include "generalized.hpp"
#include "purity.hpp"

namespace wsc {

enum class ConjectureMode { exhaustive, sample };

inline constexpr int kExhaustiveConjectureMax = 5;
inline constexpr std::size_t kDefaultCycleLimit = 200000;

/// One conjecture's tally across the run.
struct ConjectureTally
{
  std::string id;
  std::string statement;
  std::size_t checked = 0;
  std::size_t holds = 0;
};

struct ConjectureCounterexample
{
  std::string conjecture;
  std::vector<Subset> sequence;
  bool grassmann = false;
  std::string detail;
};

struct GeneralizedCase
{
  std::vector<Subset> sequence;
  bool grassmann = false;
  std::size_t interior_size = 0;
  std::size_t exterior_size = 0;
  bool interior_pure = false;
  bool exterior_pure = false;
  int interior_rank = 0;
  int exterior_rank = 0;
  bool restriction_holds = false;
  std::size_t restrictions_checked = 0;
  bool separated = false;

  bool all_hold() const { return interior_pure && exterior_pure && restriction_holds && separated; }
};

struct ConjectureReport
{
  int n = 0;
  int r = 0;
  ConjectureMode mode = ConjectureMode::exhaustive;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<GeneralizedCase> cases;
  std::vector<ConjectureTally> tallies; // purity, restriction, separation
  std::vector<ConjectureCounterexample> counterexamples;
  std::size_t grassmann_cases = 0;
  bool grassmann_all_hold = true;
  double elapsed_ms = 0;
};

namespace detail {

/// Rotation class representative: the rotation starting at the smallest set.
inline std::vector<Subset> canonical_rotation(const std::vector<Subset>& seq)
{
  const auto it = std::min_element(seq.begin(), seq.end());
  std::vector<Subset> out(it, seq.end());
  out.insert(out.end(), seq.begin(), it);
  return out;
}

/// Simple cycles (length >= 3) through pairwise separated vertices of the
/// neighbor graph, each started at its smallest vertex.
inline std::vector<std::vector<Subset>> separated_neighbor_cycles(const GroundContext& ctx, std::size_t limit)
{
  const auto verts = grassmannian(ctx);
  const std::size_t v = verts.size();
  std::vector<std::vector<char>> sep(v, std::vector<char>(v)), nb(v, std::vector<char>(v));
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < v; ++b) {
      sep[a][b] = weakly_separated(verts[a], verts[b]);
      nb[a][b] = neighbors(verts[a], verts[b]);
    }
  std::vector<std::vector<Subset>> out;
  std::vector<std::size_t> path;
  std::function<void()> extend = [&] {
    const std::size_t start = path.front(), last = path.back();
    if (path.size() >= 3 && nb[last][start]) {
      if (out.size() >= limit)
        throw ResourceError("more than " + std::to_string(limit) + " candidate cycles in C(" + std::to_string(ctx.n) +
                            "," + std::to_string(ctx.r) + ")");
      std::vector<Subset> seq;
      for (auto k : path)
        seq.push_back(verts[k]);
      out.push_back(std::move(seq));
    }
    for (std::size_t next = start + 1; next < v; ++next) {
      if (!nb[last][next] || std::find(path.begin(), path.end(), next) != path.end())
        continue;
      if (!std::all_of(path.begin(), path.end(), [&](std::size_t k) { return sep[k][next]; }))
        continue;
      path.push_back(next);
      extend();
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < v; ++s) {
    path = {s};
    extend();
  }
  return out;
}

/// Seeded random walks closed into cycles; distinct rotation classes only.
inline std::vector<std::vector<Subset>> sampled_neighbor_cycles(const GroundContext& ctx, int trials,
                                                                std::uint64_t seed)
{
  const auto verts = grassmannian(ctx);
  std::mt19937_64 rng(seed);
  std::set<std::vector<Subset>> seen;
  std::vector<std::vector<Subset>> out;
  if (verts.empty())
    return out;
  for (int t = 0; t < trials; ++t) {
    std::vector<Subset> path{verts[std::uniform_int_distribution<std::size_t>(0, verts.size() - 1)(rng)]};
    while (true) {
      if (path.size() >= 3 && neighbors(path.back(), path.front()) && std::bernoulli_distribution(0.5)(rng))
        break;
      std::vector<Subset> options;
      for (const Subset& x : verts)
        if (neighbors(path.back(), x) && std::find(path.begin(), path.end(), x) == path.end() &&
            std::all_of(path.begin(), path.end(), [&](const Subset& y) { return weakly_separated(x, y); }))
          options.push_back(x);
      if (options.empty()) {
        if (!(path.size() >= 3 && neighbors(path.back(), path.front())))
          path.clear();
        break;
      }
      path.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
    }
    if (path.empty())
      continue;
    auto canon = canonical_rotation(path);
    if (seen.insert(canon).second)
      out.push_back(std::move(canon));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string sequence_text(const std::vector<Subset>& seq)
{
  std::string s = "(";
  for (std::size_t k = 0; k < seq.size(); ++k)
    s += (k ? "," : "") + to_literal(seq[k]);
  return s + ")";
}

} // namespace detail

/// Checks all three properties on every generalized necklace of C(n, r).
inline ConjectureReport run_conjectures(int n, int r, ConjectureMode mode, int trials, std::uint64_t seed,
                                        std::size_t limit = kDefaultDomainLimit)
{
  const GroundContext ctx(n, r);
  if (mode == ConjectureMode::exhaustive && n > kExhaustiveConjectureMax)
    throw InputError("exhaustive conjecture runs are limited to n <= " + std::to_string(kExhaustiveConjectureMax) +
                     "; use sample mode");
  if (mode == ConjectureMode::sample && trials < 1)
    throw InputError("sample mode needs at least one trial");
  const auto start = std::chrono::steady_clock::now();

  ConjectureReport rep;
  rep.n = n;
  rep.r = r;
  rep.mode = mode;
  rep.trials = trials;
  rep.seed = seed;
  rep.tallies = {
    {"purity", "Int(K) and Out(K) are pure", 0, 0},
    {"restriction", "for maximal C in C(n,r) containing K, C n Int(K) and C n Out(K) are maximal there", 0, 0},
    {"separation", "Int(K) || Out(K)", 0, 0},
  };

  const auto cycles = mode == ConjectureMode::exhaustive ? detail::separated_neighbor_cycles(ctx, kDefaultCycleLimit)
                                                         : detail::sampled_neighbor_cycles(ctx, trials, seed);
  const Collection gr = full_grassmannian(ctx);
  std::optional<std::vector<Collection>> grassmannian_maximal;

  for (const auto& seq : cycles) {
    if (!curve_through(seq).simple())
      continue;
    const GeneralizedNecklace k = validate_generalized(seq);
    GeneralizedCase c;
    c.sequence = seq;
    c.grassmann = as_grassmann_necklace(k).has_value();
    const Collection in = generalized_interior(k);
    const Collection out = generalized_exterior(k);
    c.interior_size = in.size();
    c.exterior_size = out.size();
    const SystemRank ri = rank_of(in, limit), ro = rank_of(out, limit);
    c.interior_pure = ri.pure;
    c.exterior_pure = ro.pure;
    c.interior_rank = ri.rank;
    c.exterior_rank = ro.rank;

    if (!grassmannian_maximal)
      grassmannian_maximal = maximal_separated_collections(gr, limit);
    c.restriction_holds = true;
    std::string restriction_witness;
    const Collection base = k.as_collection();
    for (const Collection& m : *grassmannian_maximal) {
      if (!base.is_subset_of(m))
        continue;
      ++c.restrictions_checked;
      const Collection mi = set_intersection(m, in), mo = set_intersection(m, out);
      if (!is_maximal(mi, in) || !is_maximal(mo, out)) {
        c.restriction_holds = false;
        restriction_witness = "C = " + to_literal(m);
        break;
      }
    }
    c.separated = separated_from(in, out);

    auto tally = [&](std::size_t idx, bool ok, const std::string& detail) {
      ++rep.tallies[idx].checked;
      if (ok)
        ++rep.tallies[idx].holds;
      else
        rep.counterexamples.push_back({rep.tallies[idx].id, seq, c.grassmann, detail});
    };
    std::string impure;
    if (!c.interior_pure)
      impure = "Int(K) is not pure";
    if (!c.exterior_pure)
      impure += std::string(impure.empty() ? "" : "; ") + "Out(K) is not pure";
    tally(0, impure.empty(), impure);
    tally(1, c.restriction_holds, restriction_witness);
    tally(2, c.separated, "Int(K) and Out(K) contain non-separated sets");

    if (c.grassmann) {
      ++rep.grassmann_cases;
      rep.grassmann_all_hold = rep.grassmann_all_hold && c.all_hold();
    }
    rep.cases.push_back(std::move(c));
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

} // namespace wsc
