#pragma once

// Grassmann necklaces, their permutations and alignments.
//
// A necklace is a cyclic sequence (N_1, ..., N_n) of r-subsets of [n] with
// N_{i+1} containing N_i - {i} (indices mod n). When every i lies in N_i
// (dummy-free), step i deletes i and adds pi(i), which defines a
// permutation pi of [n]; conversely
//
//     N_i = { j : j <=_i pi^{-1}(j) }.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "collection.hpp"
#include "subset.hpp"

namespace wsc {

/// A bijection of [n], stored 1-based: image(i) = pi(i).
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::vector<Element> image) : image_(std::move(image))
  {
    const int n = static_cast<int>(image_.size());
    if (n < 1 || n > kMaxGround)
      throw InputError("permutation size outside [1, 32]");
    std::vector<bool> seen(n + 1, false);
    for (Element e : image_) {
      if (e < 1 || e > n || seen[e])
        throw InputError("not a permutation of [" + std::to_string(n) + "]");
      seen[e] = true;
    }
    inverse_.assign(n, 0);
    for (int i = 1; i <= n; ++i)
      inverse_[image_[i - 1] - 1] = i;
  }

  static Permutation identity(int n)
  {
    std::vector<Element> im(n);
    for (int i = 0; i < n; ++i)
      im[i] = i + 1;
    return Permutation(std::move(im));
  }

  /// i -> i + shift (mod n), representatives in [1, n].
  static Permutation rotation(int n, int shift)
  {
    std::vector<Element> im(n);
    for (int i = 1; i <= n; ++i)
      im[i - 1] = ((i - 1 + shift) % n + n) % n + 1;
    return Permutation(std::move(im));
  }

  int size() const noexcept { return static_cast<int>(image_.size()); }
  Element operator()(Element i) const { return image_.at(i - 1); }
  Element inverse(Element j) const { return inverse_.at(j - 1); }
  const std::vector<Element>& image() const noexcept { return image_; }

  bool operator==(const Permutation& o) const { return image_ == o.image_; }

private:
  std::vector<Element> image_;
  std::vector<Element> inverse_;
};

/// "4,3,1,2" means 1->4, 2->3, 3->1, 4->2. Without commas, whitespace separates.
inline Permutation parse_permutation(std::string_view text)
{
  const bool commas = text.find(',') != std::string_view::npos;
  const auto is_sep = [commas](char c) { return commas ? c == ',' : c == ' ' || c == '\t'; };
  if (!commas) {
    while (!text.empty() && is_sep(text.front()))
      text.remove_prefix(1);
    while (!text.empty() && is_sep(text.back()))
      text.remove_suffix(1);
  }
  std::vector<Element> im;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = pos;
    while (next < text.size() && !is_sep(text[next]))
      ++next;
    if (!commas)
      while (next + 1 < text.size() && is_sep(text[next + 1]))
        ++next;
    std::string tok(text.substr(pos, next - pos));
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '\t'; }),
              tok.end());
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        tok.size() > 3)
      throw InputError("bad permutation literal '" + std::string(text) + "'");
    im.push_back(std::stoi(tok));
    pos = next + 1;
  }
  return Permutation(std::move(im));
}

inline std::string to_literal(const Permutation& p)
{
  std::string out;
  for (Element e : p.image()) {
    if (!out.empty())
      out += ',';
    out += std::to_string(e);
  }
  return out;
}

/// The relation i =>_pi j.
struct Alignment
{
  Element i = 0;
  Element j = 0;
  bool operator==(const Alignment&) const = default;
  auto operator<=>(const Alignment&) const = default;
};

class Necklace
{
public:
  Necklace() = default;

  const GroundContext& context() const noexcept { return ctx_; }
  int n() const noexcept { return ctx_.n; }
  int r() const noexcept { return ctx_.r; }

  /// N_i, 1-based, indices taken mod n.
  const Subset& operator[](int i) const { return sets_[static_cast<std::size_t>(((i - 1) % ctx_.n + ctx_.n) % ctx_.n)]; }
  const std::vector<Subset>& sets() const noexcept { return sets_; }

  /// i in N_i for every i.
  bool dummy_free() const noexcept { return dummy_free_; }
  /// The N_i are pairwise distinct.
  bool connected() const noexcept { return connected_; }

  std::vector<Element> dummies() const
  {
    std::vector<Element> out;
    for (int i = 1; i <= ctx_.n; ++i)
      if (!(*this)[i].contains(i))
        out.push_back(i);
    return out;
  }

  Collection as_collection() const { return Collection(ctx_, sets_); }

  /// Positional equality.
  bool operator==(const Necklace& o) const { return ctx_ == o.ctx_ && sets_ == o.sets_; }

private:
  friend Necklace validate_necklace(const std::vector<Subset>& sets);

  GroundContext ctx_;
  std::vector<Subset> sets_;
  bool dummy_free_ = true;
  bool connected_ = true;
};

/// Checks the chain condition N_{i+1} contains N_i - {i}; reports the first failing i.
inline Necklace validate_necklace(const std::vector<Subset>& sets)
{
  if (sets.empty())
    throw ValidationError("necklace has no sets");
  const int n = static_cast<int>(sets.size());
  const int r = sets.front().size();
  for (int i = 1; i <= n; ++i) {
    const Subset& s = sets[i - 1];
    if (s.ground() != n)
      throw ValidationError("N_" + std::to_string(i) + " is not over [" + std::to_string(n) +
                              "] (a necklace has exactly n sets)",
                            i);
    if (s.size() != r)
      throw ValidationError("N_" + std::to_string(i) + " has cardinality " + std::to_string(s.size()) +
                              ", expected " + std::to_string(r),
                            i);
  }
  for (int i = 1; i <= n; ++i) {
    const Subset& cur = sets[i - 1];
    const Subset& next = sets[i % n];
    if (!cur.without(i).is_subset_of(next))
      throw ValidationError("chain condition fails at i=" + std::to_string(i) + ": N_" +
                              std::to_string(i % n + 1) + " = " + to_literal(next) + " does not contain N_" +
                              std::to_string(i) + " - {" + std::to_string(i) + "}",
                            i);
  }

  Necklace out;
  out.ctx_ = GroundContext(n, r);
  out.sets_ = sets;
  for (int i = 1; i <= n; ++i)
    out.dummy_free_ = out.dummy_free_ && sets[i - 1].contains(i);
  std::vector<Subset> sorted = sets;
  std::sort(sorted.begin(), sorted.end());
  out.connected_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return out;
}

inline Necklace validate_necklace(const std::vector<std::string>& literals)
{
  std::vector<Subset> sets;
  const int n = static_cast<int>(literals.size());
  for (const auto& l : literals)
    sets.push_back(parse_subset(l, n));
  return validate_necklace(sets);
}

struct DummyReduction
{
  Necklace necklace;
  std::vector<Element> removed;
};

/// Deletes every i with i not in N_i and relabels the survivors to [n'] in
/// increasing order. Positions of removed elements are dropped (N_{i+1} = N_i there).
inline DummyReduction reduce_dummies(const Necklace& nk)
{
  DummyReduction out;
  out.removed = nk.dummies();
  if (out.removed.empty()) {
    out.necklace = nk;
    return out;
  }
  const int n = nk.n();
  const int kept = n - static_cast<int>(out.removed.size());
  if (kept == 0)
    throw PreconditionError("every element is a dummy; the reduced necklace would be empty");

  std::vector<Element> relabel(n + 1, 0);
  int next = 0;
  for (int e = 1; e <= n; ++e)
    if (nk[e].contains(e))
      relabel[e] = ++next;

  std::vector<Subset> sets;
  for (int i = 1; i <= n; ++i) {
    if (relabel[i] == 0)
      continue;
    std::vector<Element> mapped;
    for (Element e : nk[i].elements()) {
      // a dummy never lies in any N_j
      mapped.push_back(relabel[e]);
    }
    sets.push_back(Subset::of(mapped, kept));
  }
  out.necklace = validate_necklace(sets);
  return out;
}

/// Average clockwise rotation: sum over i of k(i) / n, where pi(i) = i + k(i)
/// with 0 < k(i) <= n (a fixed point rotates by a full turn). Equals the
/// cardinality of the necklace of pi.
inline int average_rotation(const Permutation& p)
{
  const int n = p.size();
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    int k = ((p(i) - i) % n + n) % n;
    total += k == 0 ? n : k;
  }
  return total / n;
}

inline Necklace permutation_to_necklace(const Permutation& p)
{
  const int n = p.size();
  std::vector<Subset> sets;
  sets.reserve(n);
  for (int i = 1; i <= n; ++i) {
    Subset::Mask m = 0;
    for (int j = 1; j <= n; ++j)
      if (cyclic_less_equal(CyclicShift{i}, j, p.inverse(j), n))
        m |= Subset::bit(j);
    sets.push_back(Subset::from_mask(m, n));
  }
  return validate_necklace(sets);
}

/// The unique pi with N_{i+1} = (N_i - {i}) + {pi(i)}.
inline Permutation necklace_to_permutation(const Necklace& nk)
{
  if (!nk.dummy_free())
    throw PreconditionError("necklace has dummy elements; reduce them first");
  const int n = nk.n();
  std::vector<Element> im(n);
  for (int i = 1; i <= n; ++i) {
    Subset added = nk[i + 1] - nk[i].without(i);
    if (added.size() != 1)
      throw ValidationError("step " + std::to_string(i) + " does not add exactly one element", i);
    im[i - 1] = added.elements().front();
  }
  return Permutation(std::move(im));
}

/// The necklace N_i = [i, i+r).
inline Necklace largest_necklace(const GroundContext& ctx)
{
  if (ctx.r < 1)
    throw InputError("largest necklace needs 1 <= r <= n");
  std::vector<Subset> sets;
  for (int i = 1; i <= ctx.n; ++i)
    sets.push_back(cyclic_interval(i, ctx.r, ctx));
  return validate_necklace(sets);
}

namespace detail {

/// (a, b, c, d) weakly cyclically ordered, where only c == d may coincide.
inline bool alignment_order(Element a, Element b, Element c, Element d, int n)
{
  if (a == b || a == c || b == c || d == a || d == b)
    return false;
  const CyclicShift s{a};
  return cyclic_less(s, b, c, n) && cyclic_less_equal(s, c, d, n);
}

} // namespace detail

inline bool is_alignment(const Permutation& p, Element i, Element j)
{
  const int n = p.size();
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    return false;
  return detail::alignment_order(p.inverse(i), i, j, p.inverse(j), n);
}

/// Every pair (i, j) with pi^{-1}(i), i, j, pi^{-1}(j) in cyclic order
/// (j = pi(j) admitted, i = pi(i) not). Sorted by (i, j).
inline std::vector<Alignment> alignments(const Permutation& p)
{
  std::vector<Alignment> out;
  const int n = p.size();
  for (Element i = 1; i <= n; ++i)
    for (Element j = 1; j <= n; ++j)
      if (is_alignment(p, i, j))
        out.push_back({i, j});
  return out;
}

/// An alignment whose preimages are cyclically consecutive, with
/// pi^{-1}(j) immediately preceding pi^{-1}(i).
inline std::optional<Alignment> find_simple_alignment(const Permutation& p)
{
  const int n = p.size();
  for (int pos = 1; pos <= n; ++pos) {
    int prev = pos == 1 ? n : pos - 1;
    Element i = p(pos);
    Element j = p(prev);
    if (is_alignment(p, i, j))
      return Alignment{i, j};
  }
  return std::nullopt;
}

/// Uncrosses a simple alignment: with p = pi^{-1}(i), q = pi^{-1}(j),
/// returns pi' = pi except pi'(p) = j, pi'(q) = i.
inline Permutation reduce_simple_alignment(const Permutation& p, const Alignment& a)
{
  const int n = p.size();
  if (!is_alignment(p, a.i, a.j))
    throw InputError("(" + std::to_string(a.i) + "," + std::to_string(a.j) + ") is not an alignment");
  Element pos_i = p.inverse(a.i);
  Element pos_j = p.inverse(a.j);
  if ((pos_i == 1 ? n : pos_i - 1) != pos_j)
    throw InputError("alignment (" + std::to_string(a.i) + "," + std::to_string(a.j) + ") is not simple");
  std::vector<Element> im = p.image();
  im[pos_i - 1] = a.j;
  im[pos_j - 1] = a.i;
  return Permutation(std::move(im));
}

/// X in Int(N): N_i <<_i X for every i.
inline bool in_interior(const Necklace& nk, const Subset& x)
{
  if (x.ground() != nk.n() || x.size() != nk.r())
    return false;
  for (int i = 1; i <= nk.n(); ++i)
    if (!dominates(nk[i], x, CyclicShift{i}))
      return false;
  return true;
}

/// N1 is less than N2 iff every member of N1 lies in Int(N2).
inline bool is_less(const Necklace& a, const Necklace& b)
{
  if (a.context() != b.context())
    throw InputError("is_less: necklaces over different contexts");
  return std::all_of(a.sets().begin(), a.sets().end(), [&](const Subset& s) { return in_interior(b, s); });
}

/// Cyclic sequence of pairwise separated r-subsets with consecutive
/// members neighbors and a simple embedded curve. Built by
/// validate_generalized (generalized.hpp).
class GeneralizedNecklace
{
public:
  const GroundContext& context() const noexcept { return ctx_; }
  int size() const noexcept { return static_cast<int>(sets_.size()); }
  const std::vector<Subset>& sets() const noexcept { return sets_; }
  const Subset& operator[](int t) const { return sets_.at(static_cast<std::size_t>(t)); }
  Collection as_collection() const { return Collection(ctx_, sets_); }

  bool operator==(const GeneralizedNecklace& o) const { return ctx_ == o.ctx_ && sets_ == o.sets_; }

private:
  friend GeneralizedNecklace validate_generalized(const std::vector<Subset>& sets);

  GroundContext ctx_;
  std::vector<Subset> sets_;
};

} // namespace wsc
