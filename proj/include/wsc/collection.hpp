#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "subset.hpp"

namespace wsc {

/// A finite set of r-subsets over one ground context. Members are kept
/// sorted in canonical order and unique.
class Collection
{
public:
  using const_iterator = std::vector<Subset>::const_iterator;

  Collection() = default;
  explicit Collection(GroundContext ctx) : ctx_(ctx) {}

  Collection(GroundContext ctx, std::vector<Subset> members)
  : ctx_(ctx), members_(std::move(members))
  {
    for (const Subset& s : members_)
      check(s);
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  /// Builds from literals such as {"12", "23"}.
  static Collection of(GroundContext ctx, std::initializer_list<const char*> literals)
  {
    std::vector<Subset> m;
    for (const char* l : literals)
      m.push_back(parse_subset(l, ctx.n));
    return Collection(ctx, std::move(m));
  }

  const GroundContext& context() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  const Subset& operator[](std::size_t k) const { return members_[k]; }
  const std::vector<Subset>& members() const noexcept { return members_; }

  bool contains(const Subset& s) const
  {
    return std::binary_search(members_.begin(), members_.end(), s);
  }

  /// Returns false when already present.
  bool insert(const Subset& s)
  {
    check(s);
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it != members_.end() && *it == s)
      return false;
    members_.insert(it, s);
    return true;
  }

  bool erase(const Subset& s)
  {
    auto it = std::lower_bound(members_.begin(), members_.end(), s);
    if (it == members_.end() || *it != s)
      return false;
    members_.erase(it);
    return true;
  }

  bool is_subset_of(const Collection& o) const
  {
    return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
  }

  bool operator==(const Collection& o) const = default;

  auto operator<=>(const Collection& o) const
  {
    return std::lexicographical_compare_three_way(
      members_.begin(), members_.end(), o.members_.begin(), o.members_.end());
  }

private:
  void check(const Subset& s) const
  {
    if (s.ground() != ctx_.n || s.size() != ctx_.r)
      throw InputError("collection member " + to_literal(s) + " is not an r-subset of [n] for (n=" +
                       std::to_string(ctx_.n) + ", r=" + std::to_string(ctx_.r) + ")");
  }

  GroundContext ctx_;
  std::vector<Subset> members_;
};

inline Collection full_grassmannian(const GroundContext& ctx)
{
  return Collection(ctx, grassmannian(ctx));
}

inline Collection set_union(const Collection& a, const Collection& b)
{
  std::vector<Subset> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Collection(a.context(), std::move(out));
}

inline Collection set_intersection(const Collection& a, const Collection& b)
{
  std::vector<Subset> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Collection(a.context(), std::move(out));
}

inline Collection set_difference(const Collection& a, const Collection& b)
{
  std::vector<Subset> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Collection(a.context(), std::move(out));
}

/// Every member separated from every other.
inline bool is_separated(const Collection& c)
{
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b)
      if (!weakly_separated(c[a], c[b]))
        return false;
  return true;
}

/// Systems separated from each other: X || Y for all X in a, Y in b.
inline bool separated_from(const Collection& a, const Collection& b)
{
  for (const Subset& x : a)
    for (const Subset& y : b)
      if (!weakly_separated(x, y))
        return false;
  return true;
}

inline bool separated_from_all(const Subset& x, const Collection& c)
{
  for (const Subset& y : c)
    if (!weakly_separated(x, y))
      return false;
  return true;
}

inline std::string to_literal(const Collection& c)
{
  std::string s = "{";
  for (std::size_t k = 0; k < c.size(); ++k)
    s += (k ? " " : "") + to_literal(c[k]);
  return s + "}";
}

} // namespace wsc
