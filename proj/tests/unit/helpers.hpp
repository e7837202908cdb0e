#pragma once

#include <string>
#include <vector>

#include <wsc/wsc.hpp>

namespace wsc::test {

inline Subset S(const std::string& literal, int n) { return parse_subset(literal, n); }

inline Collection C(int n, int r, const std::vector<std::string>& literals)
{
  std::vector<Subset> out;
  for (const auto& l : literals)
    out.push_back(parse_subset(l, n));
  return Collection(GroundContext(n, r), std::move(out));
}

inline Necklace N(const std::vector<std::string>& literals) { return validate_necklace(literals); }

inline Permutation P(const std::string& literal) { return parse_permutation(literal); }

inline std::vector<std::string> literals(const Collection& c)
{
  std::vector<std::string> out;
  for (const Subset& s : c)
    out.push_back(to_literal(s));
  return out;
}

inline std::vector<std::string> literals(const std::vector<Subset>& v)
{
  std::vector<std::string> out;
  for (const Subset& s : v)
    out.push_back(to_literal(s));
  return out;
}

inline std::string fixture(const std::string& name) { return std::string(WSC_FIXTURES) + "/" + name; }

/// The 13-set maximal collection of C(7,3) containing the largest necklace.
inline Collection heptagon_collection()
{
  return C(7, 3, {"127", "123", "234", "345", "456", "567", "167", "126", "124", "134", "346", "467", "146"});
}

} // namespace wsc::test
