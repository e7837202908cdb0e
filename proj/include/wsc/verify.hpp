#pragma once

// Exhaustive verification batteries.
//
// Each claim runs a property over every object in its range (all
// permutations of [n], all dummy-free necklaces, all maximal collections of
// C(n, r), ...) and records the first counterexample it meets. Claims are
// deterministic given (range, seed); `threads` only changes wall time.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "collection.hpp"
#include "generalized.hpp"
#include "necklace.hpp"
#include "parallel.hpp"
#include "plabic.hpp"
#include "purity.hpp"
#include "regions.hpp"

namespace wsc {

enum class ClaimStatus { pass, fail, skipped };

inline const char* to_string(ClaimStatus s)
{
  switch (s) {
    case ClaimStatus::pass:
      return "pass";
    case ClaimStatus::fail:
      return "fail";
    case ClaimStatus::skipped:
      return "skipped";
  }
  return "?";
}

struct ClaimResult
{
  std::string id;
  std::string statement;
  std::string range;
  ClaimStatus status = ClaimStatus::pass;
  std::size_t cases = 0;
  std::string witness;
  double elapsed_ms = 0;
};

struct VerificationRun
{
  std::string suite;
  int n_max = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  int samples = 100;
  bool incomplete = false;
  std::string note;
  std::vector<ClaimResult> claims;
  double elapsed_ms = 0;

  bool all_pass() const
  {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.status != ClaimStatus::fail; });
  }
};

// ---------------------------------------------------------------------------
// Enumeration helpers

inline std::vector<Permutation> all_permutations(int n)
{
  std::vector<Element> im(n);
  for (int i = 0; i < n; ++i)
    im[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

/// Dummy-free necklaces over [n], one per permutation, in permutation order.
inline std::vector<Necklace> all_necklaces(int n)
{
  std::vector<Necklace> out;
  for (const Permutation& p : all_permutations(n))
    out.push_back(permutation_to_necklace(p));
  return out;
}

inline std::string necklace_text(const Necklace& nk)
{
  std::string s = "(";
  for (std::size_t k = 0; k < nk.sets().size(); ++k)
    s += (k ? "," : "") + to_literal(nk.sets()[k]);
  return s + ")";
}

/// Maximal separated collections of C(n, r), computed once per (n, r).
class GrassmannianCache
{
public:
  const std::vector<Collection>& maximal(int n, int r)
  {
    std::lock_guard lock(mutex_);
    auto key = std::pair{n, r};
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, maximal_separated_collections(full_grassmannian(GroundContext(n, r)))).first;
    return it->second;
  }

private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, std::vector<Collection>> cache_;
};

namespace detail {

/// Runs `check` over [0, count) and keeps the lowest-index failure.
inline std::pair<std::size_t, std::optional<std::string>> sweep(std::size_t count, int threads,
                                                                 const std::function<std::optional<std::string>(std::size_t)>& check)
{
  std::vector<std::optional<std::string>> slots(count);
  parallel_for(count, threads, [&](std::size_t k) { slots[k] = check(k); });
  for (auto& s : slots)
    if (s)
      return {count, s};
  return {count, std::nullopt};
}

class ClaimTimer
{
public:
  ClaimTimer(ClaimResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~ClaimTimer()
  {
    r_.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  ClaimResult& r_;
  std::chrono::steady_clock::time_point start_;
};

inline std::string range_text(int lo, int hi) { return std::to_string(lo) + " <= n <= " + std::to_string(hi); }

inline void record(ClaimResult& res, std::size_t cases, const std::optional<std::string>& witness)
{
  res.cases += cases;
  if (witness && res.status != ClaimStatus::fail) {
    res.status = ClaimStatus::fail;
    res.witness = *witness;
  }
}

inline ClaimResult start_claim(std::string id, std::string statement, int lo, int hi)
{
  ClaimResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.range = range_text(lo, hi);
  if (hi < lo)
    r.status = ClaimStatus::skipped;
  return r;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Claims

/// Run-count separation agrees with the quantifier definition on all pairs.
inline ClaimResult check_separation_oracle(int n_lo, int n_hi)
{
  auto res = detail::start_claim("separation-oracle", "run-count weak separation equals the scan over all cyclic orders",
                                 n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto all = grassmannian(GroundContext(n, r));
      for (const Subset& x : all)
        for (const Subset& y : all) {
          ++res.cases;
          if (weakly_separated(x, y) != weakly_separated_naive(x, y) || weakly_separated(x, y) != weakly_separated(y, x))
            detail::record(res, 0, "X=" + to_literal(x) + " Y=" + to_literal(y) + " n=" + std::to_string(n));
        }
    }
  return res;
}

/// X <<_i Y <<_i Z and X || Z imply X <<_i Z.
inline ClaimResult check_dominance_transitivity(int n_lo, int n_hi)
{
  auto res = detail::start_claim("dominance-transitivity",
                                 "X <<_i Y <<_i Z with X || Z implies X <<_i Z", n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n)
    for (int r = 0; r <= n; ++r) {
      const auto all = grassmannian(GroundContext(n, r));
      for (int i = 1; i <= n; ++i)
        for (const Subset& x : all)
          for (const Subset& y : all) {
            if (!dominates(x, y, CyclicShift{i}))
              continue;
            for (const Subset& z : all) {
              ++res.cases;
              if (dominates(y, z, CyclicShift{i}) && weakly_separated(x, z) && !dominates(x, z, CyclicShift{i}))
                detail::record(res, 0,
                               "X=" + to_literal(x) + " Y=" + to_literal(y) + " Z=" + to_literal(z) + " i=" + std::to_string(i));
            }
          }
    }
  return res;
}

/// N_i - N_j lies in the cyclic interval [i, j) and N_i <<_i N_j.
inline ClaimResult check_necklace_intervals(int n_lo, int n_hi, int threads)
{
  auto res = detail::start_claim("necklace-intervals", "N_i - N_j lies in [i, j) and N_i <<_i N_j for all i, j", n_lo,
                                 n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto perms = all_permutations(n);
    auto [count, w] = detail::sweep(perms.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
      const Necklace nk = permutation_to_necklace(perms[k]);
      const GroundContext ctx = nk.context();
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const int len = ((j - i) % n + n) % n;
          const Subset interval = cyclic_interval(i, len, GroundContext(n, len));
          if (!(nk[i] - nk[j]).is_subset_of(interval) || !dominates(nk[i], nk[j], CyclicShift{i}))
            return necklace_text(nk) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
        }
      (void)ctx;
      return std::nullopt;
    });
    detail::record(res, count, w);
  }
  return res;
}

/// Bijection necklaces <-> permutations, cardinality = average rotation,
/// and the simple-alignment reduction.
inline ClaimResult check_alignment_reduction(int n_lo, int n_hi, int threads)
{
  auto res = detail::start_claim(
    "alignment-reduction",
    "necklace/permutation bijection; a simple alignment exists whenever an alignment does; uncrossing it removes exactly "
    "that alignment, enlarges the interior, keeps sets of the larger interior separated from N_p (other than N'_p) "
    "inside the smaller one, and iterating ends at the rotation by r",
    n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto perms = all_permutations(n);
    auto [count, w] = detail::sweep(perms.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
      const Permutation& p = perms[k];
      const std::string tag = "pi=" + to_literal(p);
      const Necklace nk = permutation_to_necklace(p);
      if (!nk.dummy_free() || !(necklace_to_permutation(nk) == p))
        return tag + ": round trip failed";
      if (nk.r() != average_rotation(p))
        return tag + ": cardinality differs from average rotation";
      Permutation cur = p;
      auto aligned = alignments(cur);
      int steps = 0;
      while (!aligned.empty()) {
        auto simple = find_simple_alignment(cur);
        if (!simple)
          return tag + ": alignments but no simple alignment at " + to_literal(cur);
        const Permutation next = reduce_simple_alignment(cur, *simple);
        auto expected = aligned;
        expected.erase(std::find(expected.begin(), expected.end(), *simple));
        const auto next_aligned = alignments(next);
        if (next_aligned != expected)
          return tag + ": uncrossing " + to_literal(cur) + " did not remove exactly one alignment";
        const Necklace a = permutation_to_necklace(cur);
        const Necklace b = permutation_to_necklace(next);
        const Collection ia = interior(a), ib = interior(b);
        if (!ia.is_subset_of(ib))
          return tag + ": interior shrank under uncrossing";
        const Element pos = cur.inverse(simple->i);
        for (const Subset& x : ib)
          if (weakly_separated(x, a[pos]) && x != b[pos] && !ia.contains(x))
            return tag + ": " + to_literal(x) + " escapes the smaller interior";
        cur = next;
        aligned = next_aligned;
        ++steps;
      }
      if (!(cur == Permutation::rotation(n, nk.r() % n)))
        return tag + ": alignment-free end point " + to_literal(cur) + " is not the rotation";
      if (steps != static_cast<int>(alignments(p).size()))
        return tag + ": step count mismatch";
      return std::nullopt;
    });
    detail::record(res, count, w);
  }
  return res;
}

/// Maximal separated collections of C(n, r) all have size r(n-r)+1.
inline ClaimResult check_grassmannian_purity(int n_lo, int n_hi, GrassmannianCache& cache)
{
  auto res = detail::start_claim("grassmannian-purity",
                                 "every maximal separated collection in C(n,r) has size r(n-r)+1 (1 <= r <= n-1)", n_lo,
                                 n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n)
    for (int r = 1; r <= n - 1; ++r) {
      const GroundContext ctx(n, r);
      const Collection gr = full_grassmannian(ctx);
      for (const Collection& c : cache.maximal(n, r)) {
        ++res.cases;
        if (static_cast<int>(c.size()) != grassmannian_rank(ctx) || !is_maximal(c, gr))
          detail::record(res, 0,
                         "n=" + std::to_string(n) + " r=" + std::to_string(r) + " size " + std::to_string(c.size()) +
                           ": " + to_literal(c));
      }
    }
  return res;
}

inline ClaimResult check_interior_rank(int n_lo, int n_hi, int threads)
{
  auto res = detail::start_claim("interior-exterior-rank",
                                 "Int(N_pi) is pure of rank r(n-r)+1 - #alignments; Out(N_pi) is pure of rank #alignments",
                                 n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto perms = all_permutations(n);
    auto [count, w] = detail::sweep(perms.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
      const auto rep = verify_rank_formula(perms[k]);
      if (!rep.pass)
        return rep.witness;
      return std::nullopt;
    });
    detail::record(res, count, w);
  }
  return res;
}

inline ClaimResult check_chamber_interior(int n_lo, int n_hi, int threads)
{
  auto res = detail::start_claim("chamber-interior", "Int(N_pi) equals the set of pi-chamber r-subsets", n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto perms = all_permutations(n);
    auto [count, w] = detail::sweep(perms.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
      const Collection a = interior(permutation_to_necklace(perms[k]));
      const Collection b = interior_chamber(perms[k]);
      if (a != b)
        return "pi=" + to_literal(perms[k]) + " Int=" + to_literal(a) + " chamber=" + to_literal(b);
      return std::nullopt;
    });
    detail::record(res, count, w);
  }
  return res;
}

inline ClaimResult check_interior_exterior_separated(int n_lo, int n_hi, int threads)
{
  auto res = detail::start_claim("interior-exterior-separated", "Int(N) || Out(N) for every dummy-free necklace", n_lo,
                                 n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto perms = all_permutations(n);
    auto [count, w] = detail::sweep(perms.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
      const Necklace nk = permutation_to_necklace(perms[k]);
      const Collection in = interior(nk), out = exterior(nk);
      for (const Subset& x : out)
        for (const Subset& y : in)
          if (!weakly_separated(x, y))
            return necklace_text(nk) + ": " + to_literal(x) + " in Out, " + to_literal(y) + " in Int";
      if (!set_intersection(in, out).empty() || set_union(in, out) != separated_fan(nk))
        return necklace_text(nk) + ": Int and Out do not partition S(N)";
      return std::nullopt;
    });
    detail::record(res, count, w);
  }
  return res;
}

/// Restriction of maximal Grassmannian collections containing N to Int(N) is maximal there.
/// Exhaustive for n <= exhaustive_max, otherwise `samples` seeded greedy completions per necklace.
inline ClaimResult check_restriction_maximal(int n_lo, int n_hi, int exhaustive_max, int samples, std::uint64_t seed,
                                             int threads, GrassmannianCache& cache)
{
  auto res = detail::start_claim(
    "restriction-maximal",
    "for maximal C in C(n,r) containing N, C n Int(N) is maximal in Int(N) (exhaustive for n <= " +
      std::to_string(exhaustive_max) + ", " + std::to_string(samples) + " seeded samples per necklace above)",
    n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto perms = all_permutations(n);
    const bool exhaustive = n <= exhaustive_max;
    if (exhaustive)
      for (int r = 1; r <= n; ++r)
        cache.maximal(n, r);
    std::vector<std::size_t> checked(perms.size(), 0);
    auto [count, w] = detail::sweep(perms.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
      const Necklace nk = permutation_to_necklace(perms[k]);
      const RestrictionReport rep = exhaustive ? verify_restriction_exhaustive(nk, cache.maximal(n, nk.r()))
                                                 : verify_restriction(nk, samples, seed + k);
      checked[k] = static_cast<std::size_t>(rep.checked);
      if (!rep.pass)
        return necklace_text(nk) + ": " + rep.witness;
      if (rep.checked == 0)
        return necklace_text(nk) + ": no maximal collection contains the necklace";
      return std::nullopt;
    });
    (void)count;
    std::size_t total = 0;
    for (auto c : checked)
      total += c;
    detail::record(res, total, w);
  }
  return res;
}

/// Squares Aij, Ajk, Akl, Ali in a maximal collection always have a diagonal;
/// mutations keep collections maximal and are involutive.
inline ClaimResult check_square_diagonals(int n_lo, int n_hi, GrassmannianCache& cache)
{
  auto res = detail::start_claim("square-diagonal",
                                 "a maximal collection containing Aij, Ajk, Akl, Ali contains Aik or Ajl; mutations preserve "
                                 "maximality and invert",
                                 n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n)
    for (int r = 1; r <= n - 1; ++r) {
      const Collection gr = full_grassmannian(GroundContext(n, r));
      for (const Collection& c : cache.maximal(n, r)) {
        ++res.cases;
        if (auto open = find_open_square(c)) {
          detail::record(res, 0, to_literal(c) + " misses both diagonals of base " + to_literal(open->base));
          continue;
        }
        for (const Mutation& m : find_mutations(c)) {
          const Collection next = apply_mutation(c, m);
          const auto back = find_mutations(next);
          const bool inverse = std::any_of(back.begin(), back.end(),
                                           [&](const Mutation& b) { return b.from == m.to && b.to == m.from; });
          if (!is_separated(next) || !is_maximal(next, gr) || !inverse)
            detail::record(res, 0, to_literal(c) + ": mutation " + to_literal(m.from) + "->" + to_literal(m.to));
        }
      }
    }
  return res;
}

inline ClaimResult check_two_necklaces(int n_lo, int n_hi, int threads)
{
  auto res = detail::start_claim(
    "two-necklace-cells",
    "for separated necklaces N1, N2 the four systems I1nI2, I1nO2, O1nI2, O1nO2 are pure with ranks summing to r(n-r)+1; "
    "the ring O1nI2 (N1 less than N2) has rank r(n-r)+1 - rk(I1) - rk(O2); I1uI2 is pure when I1 || N2 and I2 || N1",
    n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto necklaces = all_necklaces(n);
    auto [count, w] = detail::sweep(necklaces.size(), threads, [&](std::size_t a) -> std::optional<std::string> {
      for (const Necklace& other : necklaces) {
        if (other.context() != necklaces[a].context())
          continue;
        const TwoNecklaceReport rep = verify_two_necklaces(necklaces[a], other);
        if (rep.applicable && !rep.pass)
          return rep.witness;
      }
      return std::nullopt;
    });
    detail::record(res, count, w);
  }
  return res;
}

inline ClaimResult check_less_criterion(int n_lo, int n_hi, int threads)
{
  auto res = detail::start_claim("less-criterion", "Int(N1) in Int(N2) iff N1 in Int(N2)", n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto necklaces = all_necklaces(n);
    auto [count, w] = detail::sweep(necklaces.size(), threads, [&](std::size_t a) -> std::optional<std::string> {
      for (const Necklace& other : necklaces) {
        if (other.context() != necklaces[a].context())
          continue;
        if (is_less(necklaces[a], other) != is_less_by_interiors(necklaces[a], other))
          return necklace_text(necklaces[a]) + " vs " + necklace_text(other);
      }
      return std::nullopt;
    });
    detail::record(res, count * count, w);
  }
  return res;
}

/// Sigma(C) of every maximal collection in C(n, r) is a complex with
/// V - E + F = 1 that fills the regular n-gon.
inline ClaimResult check_grassmannian_tilings(int n_lo, int n_hi, int threads, GrassmannianCache& cache)
{
  auto res = detail::start_claim("grassmannian-tilings",
                                 "Sigma(C) of every maximal C in C(n,r) is a complex, has V - E + F = 1, joins only "
                                 "neighbors and fills the regular n-gon",
                                 n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = std::max(n_lo, 3); n <= n_hi; ++n)
    for (int r = 1; r <= n - 1; ++r) {
      const auto& maximal = cache.maximal(n, r);
      const PolyCurve ngon = necklace_curve(largest_necklace(GroundContext(n, r)));
      auto [count, w] = detail::sweep(maximal.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
        const Tiling t = build_tiling(maximal[k]);
        const ComplexReport cr = complex_check(t);
        if (!cr.pass)
          return to_literal(maximal[k]) + ": " + cr.violations.front();
        if (t.euler_characteristic() != 1)
          return to_literal(maximal[k]) + ": V-E+F = " + std::to_string(t.euler_characteristic());
        for (const auto& [a, b] : t.edges)
          if (!neighbors(a, b))
            return to_literal(maximal[k]) + ": edge between non-neighbors";
        if (!fills_region(t, ngon))
          return to_literal(maximal[k]) + ": does not fill the n-gon";
        return std::nullopt;
      });
      detail::record(res, count, w);
    }
  return res;
}

inline std::vector<Necklace> connected_necklaces(int n)
{
  std::vector<Necklace> out;
  for (Necklace& nk : all_necklaces(n))
    if (nk.connected())
      out.push_back(std::move(nk));
  return out;
}

inline ClaimResult check_simple_curves(int n_lo, int n_hi, int threads)
{
  auto res = detail::start_claim("simple-curves", "xi(N) is a simple closed curve for every connected necklace",
                                 std::max(n_lo, 3), n_hi);
  detail::ClaimTimer timer(res);
  for (int n = std::max(n_lo, 3); n <= n_hi; ++n) {
    const auto necklaces = connected_necklaces(n);
    auto [count, w] = detail::sweep(necklaces.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
      if (!curve_through(necklaces[k].sets()).simple())
        return necklace_text(necklaces[k]);
      return std::nullopt;
    });
    detail::record(res, count, w);
  }
  return res;
}

/// Combinatorial and geometric interior membership agree on S(N); the
/// generalized interior of a Grassmann necklace is its interior.
inline ClaimResult check_geometric_interior(int n_lo, int n_hi, int generalized_max, int threads)
{
  auto res = detail::start_claim("geometric-interior",
                                 "for X in S(N): X in Int(N) iff xi(X) lies in the closed inside of xi(N)",
                                 std::max(n_lo, 3), n_hi);
  detail::ClaimTimer timer(res);
  for (int n = std::max(n_lo, 3); n <= n_hi; ++n) {
    const auto necklaces = connected_necklaces(n);
    auto [count, w] = detail::sweep(necklaces.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
      const GeometricInteriorReport rep = verify_geometric_interior(necklaces[k]);
      if (!rep.pass)
        return necklace_text(necklaces[k]) + ": " + rep.mismatches.front();
      if (n <= generalized_max) {
        const GeneralizedNecklace g = validate_generalized(necklaces[k].sets());
        if (generalized_interior(g) != interior(necklaces[k]))
          return necklace_text(necklaces[k]) + ": generalized interior differs";
      }
      return std::nullopt;
    });
    detail::record(res, count, w);
  }
  return res;
}

/// Every maximal C' in Int(N) fills in(N); every strict subsystem does not.
inline ClaimResult check_fill_in(int n_lo, int n_hi, int threads)
{
  auto res = detail::start_claim("fill-in",
                                 "a separated C in Int(N) is maximal iff Sigma(C) fills the inside of xi(N): every maximal "
                                 "one fills, every strict subsystem of a maximal one does not",
                                 std::max(n_lo, 3), n_hi);
  detail::ClaimTimer timer(res);
  for (int n = std::max(n_lo, 3); n <= n_hi; ++n) {
    const auto necklaces = connected_necklaces(n);
    std::vector<std::size_t> checked(necklaces.size(), 0);
    auto [count, w] = detail::sweep(necklaces.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
      const Necklace& nk = necklaces[k];
      const PolyCurve curve = necklace_curve(nk);
      const auto maximal = maximal_separated_collections(interior(nk));
      std::vector<Collection> strict;
      for (const Collection& c : maximal) {
        ++checked[k];
        if (!fills_region(build_tiling(c), curve))
          return necklace_text(nk) + ": maximal " + to_literal(c) + " does not fill";
        const std::size_t m = c.size();
        for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << m); ++mask) {
          std::vector<Subset> part;
          for (std::size_t b = 0; b < m; ++b)
            if (mask >> b & 1u)
              part.push_back(c[b]);
          strict.emplace_back(c.context(), std::move(part));
        }
      }
      std::sort(strict.begin(), strict.end());
      strict.erase(std::unique(strict.begin(), strict.end()), strict.end());
      for (const Collection& s : strict) {
        ++checked[k];
        if (fills_region(build_tiling(s), curve))
          return necklace_text(nk) + ": non-maximal " + to_literal(s) + " fills";
      }
      return std::nullopt;
    });
    (void)count;
    std::size_t total = 0;
    for (auto c : checked)
      total += c;
    detail::record(res, total, w);
  }
  return res;
}

inline ClaimResult check_interior_mutation_connected(int n_lo, int n_hi, int threads)
{
  auto res = detail::start_claim("interior-mutation-connected",
                                 "maximal separated collections of Int(N) are connected by mutations", n_lo, n_hi);
  detail::ClaimTimer timer(res);
  for (int n = n_lo; n <= n_hi; ++n) {
    const auto necklaces = all_necklaces(n);
    auto [count, w] = detail::sweep(necklaces.size(), threads, [&](std::size_t k) -> std::optional<std::string> {
      const MutationGraph g = mutation_graph(interior(necklaces[k]));
      for (auto [a, b] : g.edges)
        if (set_difference(g.nodes[a], g.nodes[b]).size() != 1)
          return necklace_text(necklaces[k]) + ": mutation edge changes more than one set";
      if (!g.connected())
        return necklace_text(necklaces[k]) + ": " + std::to_string(g.nodes.size()) + " maximal collections, " +
               std::to_string(g.edges.size()) + " edges, disconnected";
      return std::nullopt;
    });
    detail::record(res, count, w);
  }
  return res;
}

/// Number of triangulations of a convex polygon with `vertices` corners,
/// by splitting on the triangle over a fixed side.
inline std::uint64_t count_polygon_triangulations(int vertices)
{
  std::vector<std::uint64_t> t(std::max(vertices, 3) + 1, 0);
  t[2] = 1; // a bare edge
  for (int m = 3; m <= vertices; ++m)
    for (int apex = 2; apex <= m - 1; ++apex)
      t[m] += t[apex] * t[m - apex + 1];
  return t[vertices];
}

inline std::uint64_t catalan(int k)
{
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i)
    c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

inline ClaimResult check_catalan(int n_lo, int n_hi, GrassmannianCache& cache)
{
  auto res = detail::start_claim("catalan-count",
                                 "C(n,2) has Catalan(n-2) maximal collections (= triangulations of the n-gon), mutation "
                                 "connected",
                                 std::max(n_lo, 3), n_hi);
  detail::ClaimTimer timer(res);
  for (int n = std::max(n_lo, 3); n <= n_hi; ++n) {
    ++res.cases;
    const auto count = cache.maximal(n, 2).size();
    if (count != catalan(n - 2) || count != count_polygon_triangulations(n))
      detail::record(res, 0, "n=" + std::to_string(n) + ": " + std::to_string(count) + " maximal collections, Catalan " +
                               std::to_string(catalan(n - 2)));
    if (!mutation_connected(full_grassmannian(GroundContext(n, 2))))
      detail::record(res, 0, "n=" + std::to_string(n) + ": flip graph disconnected");
  }
  return res;
}

// ---------------------------------------------------------------------------

struct VerifyOptions
{
  int n_max = 6;
  std::uint64_t seed = 1;
  int threads = 1;
  int samples = 100;
};

/// Per-claim upper limits on n (the battery's documented budget).
struct ClaimCaps
{
  static constexpr int separation = 8;
  static constexpr int transitivity = 6;
  static constexpr int intervals = 7;
  static constexpr int grassmannian = 7;
  static constexpr int catalan = 8;
  static constexpr int necklace = 6;
  static constexpr int restriction_exhaustive = 5;
  static constexpr int pairs = 5;
  static constexpr int curves = 7;
  static constexpr int generalized = 5;
};

/// The "theorems" suite: every claim, each over n <= min(n_max, its cap).
inline VerificationRun run_verify(const std::string& suite, const VerifyOptions& opt)
{
  if (suite != "theorems")
    throw InputError("unknown verification suite '" + suite + "' (available: theorems)");
  if (opt.n_max < 1)
    throw InputError("n_max must be at least 1");
  VerificationRun run;
  run.suite = suite;
  run.n_max = opt.n_max;
  run.seed = opt.seed;
  run.threads = opt.threads;
  run.samples = opt.samples;
  if (opt.n_max > 7) {
    run.incomplete = true;
    run.note = "claims are capped at their documented n limits; n_max above 7 does not extend the battery";
  }
  const auto start = std::chrono::steady_clock::now();
  GrassmannianCache cache;
  const int t = opt.threads;
  auto cap = [&](int c) { return std::min(opt.n_max, c); };

  run.claims.push_back(check_separation_oracle(1, cap(ClaimCaps::separation)));
  run.claims.push_back(check_dominance_transitivity(1, cap(ClaimCaps::transitivity)));
  run.claims.push_back(check_necklace_intervals(1, cap(ClaimCaps::intervals), t));
  run.claims.push_back(check_grassmannian_purity(2, cap(ClaimCaps::grassmannian), cache));
  run.claims.push_back(check_alignment_reduction(1, cap(ClaimCaps::necklace), t));
  run.claims.push_back(check_chamber_interior(1, cap(ClaimCaps::necklace), t));
  run.claims.push_back(check_interior_rank(1, cap(ClaimCaps::necklace), t));
  run.claims.push_back(check_interior_exterior_separated(1, cap(ClaimCaps::necklace), t));
  run.claims.push_back(
    check_restriction_maximal(1, cap(ClaimCaps::necklace), ClaimCaps::restriction_exhaustive, opt.samples, opt.seed, t, cache));
  run.claims.push_back(check_square_diagonals(2, cap(ClaimCaps::necklace), cache));
  run.claims.push_back(check_two_necklaces(1, cap(ClaimCaps::pairs), t));
  run.claims.push_back(check_less_criterion(1, cap(ClaimCaps::pairs), t));
  run.claims.push_back(check_simple_curves(3, cap(ClaimCaps::curves), t));
  run.claims.push_back(check_geometric_interior(3, cap(ClaimCaps::necklace), ClaimCaps::generalized, t));
  run.claims.push_back(check_fill_in(3, cap(ClaimCaps::necklace), t));
  run.claims.push_back(check_grassmannian_tilings(3, cap(ClaimCaps::necklace), t, cache));
  run.claims.push_back(check_interior_mutation_connected(1, cap(ClaimCaps::necklace), t));
  run.claims.push_back(check_catalan(3, cap(ClaimCaps::catalan), cache));

  run.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run;
}

} // namespace wsc
