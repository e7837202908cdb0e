#pragma once

// The separated fan S(N), interior Int(N) and exterior Out(N) of a necklace.
//
//   S(N)   = { X : X || N_i for all i }
//   Int(N) = { X : N_i <<_i X for all i }    (equivalently: the pi-chamber sets)
//   Out(N) = S(N) - Int(N)

#include "collection.hpp"
#include "necklace.hpp"

namespace wsc {

/// Region operations are defined for dummy-free necklaces. `allow` evaluates
/// the defining formula on any valid necklace instead of rejecting it.
enum class DummyPolicy { reject, allow };

namespace detail {

inline void require_dummy_free(const Necklace& nk, DummyPolicy policy)
{
  if (policy == DummyPolicy::reject && !nk.dummy_free())
    throw PreconditionError("necklace has dummy elements; reduce them first (--auto-reduce)");
}

} // namespace detail

/// Single-set membership in S(N).
inline bool in_separated_fan(const Necklace& nk, const Subset& x)
{
  for (const Subset& s : nk.sets())
    if (!weakly_separated(x, s))
      return false;
  return true;
}

inline Collection separated_fan(const Necklace& nk, DummyPolicy policy = DummyPolicy::reject)
{
  detail::require_dummy_free(nk, policy);
  std::vector<Subset> out;
  for (const Subset& x : grassmannian(nk.context()))
    if (in_separated_fan(nk, x))
      out.push_back(x);
  return Collection(nk.context(), std::move(out));
}

inline Collection interior(const Necklace& nk, DummyPolicy policy = DummyPolicy::reject)
{
  detail::require_dummy_free(nk, policy);
  std::vector<Subset> out;
  for (const Subset& x : grassmannian(nk.context()))
    if (in_interior(nk, x))
      out.push_back(x);
  return Collection(nk.context(), std::move(out));
}

inline Collection exterior(const Necklace& nk, DummyPolicy policy = DummyPolicy::reject)
{
  detail::require_dummy_free(nk, policy);
  std::vector<Subset> out;
  for (const Subset& x : grassmannian(nk.context()))
    if (in_separated_fan(nk, x) && !in_interior(nk, x))
      out.push_back(x);
  return Collection(nk.context(), std::move(out));
}

namespace detail {

inline bool chamber(const Subset& x, const std::vector<Alignment>& aligned)
{
  for (const Alignment& a : aligned)
    if (x.contains(a.i) && !x.contains(a.j))
      return false;
  return true;
}

} // namespace detail

/// For every alignment (i, j) of pi: i in X forces j in X.
inline bool is_chamber_set(const Subset& x, const Permutation& p)
{
  if (x.ground() != p.size())
    throw InputError("is_chamber_set: subset and permutation over different ground sets");
  if (x.size() != average_rotation(p))
    throw InputError("is_chamber_set: |X| differs from the average rotation of the permutation");
  return detail::chamber(x, alignments(p));
}

/// The pi-chamber r-subsets, computed from alignments alone.
inline Collection interior_chamber(const Permutation& p)
{
  const GroundContext ctx(p.size(), average_rotation(p));
  const auto aligned = alignments(p);
  std::vector<Subset> out;
  for (const Subset& x : grassmannian(ctx))
    if (detail::chamber(x, aligned))
      out.push_back(x);
  return Collection(ctx, std::move(out));
}

/// Oracle for is_less: compares the two interiors directly.
inline bool is_less_by_interiors(const Necklace& a, const Necklace& b)
{
  if (a.context() != b.context())
    throw InputError("is_less: necklaces over different contexts");
  return interior(a, DummyPolicy::allow).is_subset_of(interior(b, DummyPolicy::allow));
}

} // namespace wsc
