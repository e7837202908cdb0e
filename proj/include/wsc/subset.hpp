#pragma once

// Ground-level cyclic combinatorics on [n] = {1,...,n}.
//
// Subsets are single-word bit-vectors (element k lives in bit k-1), so
// n is capped at 32. Every public surface is 1-based.

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace wsc {

using Element = int;

inline constexpr int kMaxGround = 32;

/// The ambient discrete Grassmannian: r-element subsets of [n].
struct GroundContext
{
  int n = 1;
  int r = 0;

  GroundContext() = default;
  GroundContext(int n_, int r_) : n(n_), r(r_)
  {
    if (n < 1 || n > kMaxGround)
      throw InputError("ground size n=" + std::to_string(n) + " outside [1, 32]");
    if (r < 0 || r > n)
      throw InputError("cardinality r=" + std::to_string(r) + " outside [0, n]");
  }

  bool operator==(const GroundContext&) const = default;
};

/// Index of a cyclically shifted order <_i, i in [1, n].
struct CyclicShift
{
  int i = 1;
  explicit CyclicShift(int i_) : i(i_) {}
};

/// A subset of [n]. Value semantics; equality is element-set equality
/// over the same ground size.
class Subset
{
public:
  using Mask = std::uint32_t;

  Subset() = default;

  static Subset from_mask(Mask mask, int n)
  {
    check_ground(n);
    if (n < kMaxGround && (mask >> n) != 0)
      throw InputError("mask has bits beyond n=" + std::to_string(n));
    Subset s;
    s.mask_ = mask;
    s.n_ = n;
    return s;
  }

  static Subset of(std::initializer_list<Element> elements, int n)
  {
    return of(std::vector<Element>(elements), n);
  }

  static Subset of(const std::vector<Element>& elements, int n)
  {
    check_ground(n);
    Mask m = 0;
    for (Element e : elements) {
      if (e < 1 || e > n)
        throw InputError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
      m |= bit(e);
    }
    return from_mask(m, n);
  }

  static Subset full(int n) { return from_mask(full_mask(n), n); }

  static constexpr Mask bit(Element e) { return Mask{1} << (e - 1); }

  static constexpr Mask full_mask(int n)
  {
    return n >= kMaxGround ? ~Mask{0} : ((Mask{1} << n) - 1);
  }

  Mask mask() const noexcept { return mask_; }
  int ground() const noexcept { return n_; }
  int size() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }

  bool contains(Element e) const noexcept
  {
    return e >= 1 && e <= n_ && (mask_ & bit(e)) != 0;
  }

  std::vector<Element> elements() const
  {
    std::vector<Element> out;
    out.reserve(size());
    for (Mask m = mask_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  Subset with(Element e) const { return from_mask(mask_ | checked_bit(e), n_); }
  Subset without(Element e) const { return from_mask(mask_ & ~checked_bit(e), n_); }

  Subset operator-(const Subset& o) const { return from_mask(mask_ & ~o.mask_, n_); }
  Subset operator|(const Subset& o) const { return from_mask(mask_ | o.mask_, n_); }
  Subset operator&(const Subset& o) const { return from_mask(mask_ & o.mask_, n_); }
  Subset complement() const { return from_mask(~mask_ & full_mask(n_), n_); }

  bool is_subset_of(const Subset& o) const noexcept { return (mask_ & ~o.mask_) == 0; }

  bool operator==(const Subset&) const = default;

  /// Canonical order: lexicographic on the sorted element lists
  /// (a proper prefix sorts first). Ground size breaks ties last.
  std::strong_ordering operator<=>(const Subset& o) const noexcept
  {
    Mask x = mask_;
    Mask y = o.mask_;
    while (x != 0 && y != 0) {
      int lx = std::countr_zero(x);
      int ly = std::countr_zero(y);
      if (lx != ly)
        return lx <=> ly;
      x &= x - 1;
      y &= y - 1;
    }
    if (x != y)
      return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return n_ <=> o.n_;
  }

private:
  static void check_ground(int n)
  {
    if (n < 1 || n > kMaxGround)
      throw InputError("ground size n=" + std::to_string(n) + " outside [1, 32]");
  }

  Mask checked_bit(Element e) const
  {
    if (e < 1 || e > n_)
      throw InputError("element " + std::to_string(e) + " outside [1, " + std::to_string(n_) + "]");
    return bit(e);
  }

  Mask mask_ = 0;
  int n_ = 1;
};

/// Strict order <_i on [n]: i <_i i+1 <_i ... <_i n <_i 1 <_i ... <_i i-1.
inline bool cyclic_less(CyclicShift i, Element a, Element b, int n)
{
  if (n < 1 || i.i < 1 || i.i > n || a < 1 || a > n || b < 1 || b > n)
    throw InputError("cyclic_less: argument outside [1, n]");
  auto rank = [&](Element e) { return (e - i.i + n) % n; };
  return rank(a) < rank(b);
}

inline bool cyclic_less(CyclicShift i, Element a, Element b, const GroundContext& ctx)
{
  return cyclic_less(i, a, b, ctx.n);
}

/// Weak version: a <=_i b.
inline bool cyclic_less_equal(CyclicShift i, Element a, Element b, int n)
{
  return cyclic_less(i, a, b, n) || a == b;
}

namespace detail {

inline void require_comparable(const Subset& x, const Subset& y, const char* op)
{
  if (x.ground() != y.ground())
    throw InputError(std::string(op) + ": subsets over different ground sets");
  if (x.size() != y.size())
    throw InputError(std::string(op) + ": subsets of different cardinality");
}

/// Rotates a mask so that element `start` sits in bit 0; positions then
/// follow the order <_start.
inline Subset::Mask rotate_to(Subset::Mask m, int start, int n)
{
  int s = start - 1;
  if (s == 0)
    return m;
  Subset::Mask lo = m & ((Subset::Mask{1} << s) - 1);
  Subset::Mask hi = m >> s;
  return hi | (lo << (n - s));
}

} // namespace detail

/// X <<_i Y: every element of X-Y precedes every element of Y-X in <_i.
/// Vacuously true when X = Y.
inline bool dominates(const Subset& x, const Subset& y, CyclicShift i)
{
  detail::require_comparable(x, y, "dominates");
  const int n = x.ground();
  if (i.i < 1 || i.i > n)
    throw InputError("dominates: shift outside [1, n]");
  Subset::Mask a = detail::rotate_to(x.mask() & ~y.mask(), i.i, n);
  Subset::Mask b = detail::rotate_to(y.mask() & ~x.mask(), i.i, n);
  if (a == 0 || b == 0)
    return true;
  // highest position of X-Y must sit below lowest position of Y-X
  return (31 - std::countl_zero(a)) < std::countr_zero(b);
}

/// Reference definition: scan every cyclic start j.
inline bool weakly_separated_naive(const Subset& x, const Subset& y)
{
  detail::require_comparable(x, y, "weakly_separated");
  for (int j = 1; j <= x.ground(); ++j)
    if (dominates(x, y, CyclicShift{j}))
      return true;
  return false;
}

/// Run-count test: label positions of X-Y as A and Y-X as B; separated iff
/// the circular label word has at most two maximal runs.
inline bool weakly_separated(const Subset& x, const Subset& y)
{
  detail::require_comparable(x, y, "weakly_separated");
  const Subset::Mask a = x.mask() & ~y.mask();
  Subset::Mask diff = x.mask() ^ y.mask();
  if (diff == 0)
    return true;
  int changes = 0;
  bool first = (a & (diff & -diff)) != 0;
  bool prev = first;
  for (diff &= diff - 1; diff != 0; diff &= diff - 1) {
    bool cur = (a & (diff & -diff)) != 0;
    changes += cur != prev;
    prev = cur;
  }
  changes += prev != first;
  return changes <= 2;
}

/// |X delta Y| = 2.
inline bool neighbors(const Subset& x, const Subset& y)
{
  detail::require_comparable(x, y, "neighbors");
  return std::popcount(x.mask() ^ y.mask()) == 2;
}

/// {start, start+1, ..., start+length-1} modulo n.
inline Subset cyclic_interval(Element start, int length, const GroundContext& ctx)
{
  const int n = ctx.n;
  if (start < 1 || start > n)
    throw InputError("cyclic_interval: start outside [1, n]");
  if (length < 0 || length > n)
    throw InputError("cyclic_interval: length outside [0, n]");
  Subset::Mask m = 0;
  for (int t = 0; t < length; ++t)
    m |= Subset::bit((start - 1 + t) % n + 1);
  return Subset::from_mask(m, n);
}

/// All r-subsets of [n], in canonical (lexicographic) order.
inline std::vector<Subset> grassmannian(const GroundContext& ctx)
{
  std::vector<Subset> out;
  std::vector<Element> comb(ctx.r);
  for (int k = 0; k < ctx.r; ++k)
    comb[k] = k + 1;
  while (true) {
    out.push_back(Subset::of(comb, ctx.n));
    int k = ctx.r - 1;
    while (k >= 0 && comb[k] == ctx.n - ctx.r + k + 1)
      --k;
    if (k < 0)
      break;
    ++comb[k];
    for (int t = k + 1; t < ctx.r; ++t)
      comb[t] = comb[t - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Set literals: digit strings ("127") for n <= 9, comma lists ("1,2,12")
// for n >= 10. "{}" is the empty set.

inline std::string to_literal(const Subset& s)
{
  if (s.empty())
    return "{}";
  std::string out;
  for (Element e : s.elements()) {
    if (s.ground() >= 10 && !out.empty())
      out += ',';
    out += std::to_string(e);
  }
  return out;
}

inline Subset parse_subset(std::string_view text, int n)
{
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t'))
      v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r'))
      v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text == "{}")
    return Subset::from_mask(0, n);
  if (text.empty())
    throw InputError("empty set literal (write {} for the empty set)");

  std::vector<Element> elements;
  auto parse_int = [&](std::string_view tok) {
    tok = trim(tok);
    if (tok.empty())
      throw InputError("empty element in set literal '" + std::string(text) + "'");
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9')
        throw InputError("bad character in set literal '" + std::string(text) + "'");
      v = v * 10 + (c - '0');
      if (v > 1000)
        throw InputError("element too large in set literal '" + std::string(text) + "'");
    }
    return v;
  };

  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos)
        next = text.size();
      elements.push_back(parse_int(text.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else if (n <= 9) {
    for (char c : text)
      elements.push_back(parse_int(std::string_view(&c, 1)));
  } else {
    elements.push_back(parse_int(text));
  }

  Subset s = Subset::of(elements, n);
  if (static_cast<std::size_t>(s.size()) != elements.size())
    throw InputError("repeated element in set literal '" + std::string(text) + "'");
  return s;
}

} // namespace wsc
