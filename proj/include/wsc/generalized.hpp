#pragma once

// Generalized necklaces: cyclic sequences K_1..K_m of pairwise separated
// r-subsets, consecutive members neighbors, with a simple embedded curve.
//
//   Int(K) = { X : X || K and xi(X) in the closed inside of xi(K) }
//   Out(K) = S(K) - Int(K)

#include <optional>
#include <string>
#include <vector>

#include "collection.hpp"
#include "necklace.hpp"
#include "plabic.hpp"

namespace wsc {

inline GeneralizedNecklace validate_generalized(const std::vector<Subset>& sets)
{
  const int m = static_cast<int>(sets.size());
  if (m < 3)
    throw ValidationError("a generalized necklace needs at least 3 sets");
  const int n = sets.front().ground();
  const int r = sets.front().size();
  for (int t = 0; t < m; ++t)
    if (sets[t].ground() != n || sets[t].size() != r)
      throw ValidationError("K_" + std::to_string(t + 1) + " does not match the ground set or cardinality of K_1",
                            t + 1);
  for (int t = 0; t < m; ++t)
    if (!neighbors(sets[t], sets[(t + 1) % m]))
      throw ValidationError("K_" + std::to_string(t + 1) + " = " + to_literal(sets[t]) + " and K_" +
                              std::to_string((t + 1) % m + 1) + " = " + to_literal(sets[(t + 1) % m]) +
                              " are not neighbors",
                            t + 1);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!weakly_separated(sets[a], sets[b]))
        throw ValidationError("K_" + std::to_string(a + 1) + " and K_" + std::to_string(b + 1) +
                                " are not weakly separated",
                              a + 1);
  if (!curve_through(sets).simple())
    throw ValidationError("the closed curve through the sequence is not simple");

  GeneralizedNecklace k;
  k.ctx_ = GroundContext(n, r);
  k.sets_ = sets;
  return k;
}

inline bool in_generalized_interior(const GeneralizedNecklace& k, const PolyCurve& curve, const Subset& x)
{
  for (const Subset& s : k.sets())
    if (!weakly_separated(x, s))
      return false;
  return point_inside(curve, embed(x));
}

inline Collection generalized_separated_fan(const GeneralizedNecklace& k)
{
  std::vector<Subset> out;
  for (const Subset& x : grassmannian(k.context()))
    if (separated_from_all(x, k.as_collection()))
      out.push_back(x);
  return Collection(k.context(), std::move(out));
}

inline Collection generalized_interior(const GeneralizedNecklace& k)
{
  const PolyCurve curve = necklace_curve(k);
  std::vector<Subset> out;
  for (const Subset& x : grassmannian(k.context()))
    if (in_generalized_interior(k, curve, x))
      out.push_back(x);
  return Collection(k.context(), std::move(out));
}

inline Collection generalized_exterior(const GeneralizedNecklace& k)
{
  return set_difference(generalized_separated_fan(k), generalized_interior(k));
}

/// The Grassmann necklace this sequence is, up to cyclic rotation, if any.
inline std::optional<Necklace> as_grassmann_necklace(const GeneralizedNecklace& k)
{
  const int m = k.size();
  if (m != k.context().n)
    return std::nullopt;
  for (int shift = 0; shift < m; ++shift) {
    std::vector<Subset> rotated;
    for (int t = 0; t < m; ++t)
      rotated.push_back(k[(t + shift) % m]);
    try {
      Necklace nk = validate_necklace(rotated);
      if (nk.dummy_free())
        return nk;
    } catch (const ValidationError&) {
    }
  }
  return std::nullopt;
}

} // namespace wsc
