#pragma once

// Maximal clique enumeration over bit-vector adjacency rows.
//
// Bron-Kerbosch with Tomita pivoting: at every node the pivot u maximizes
// |P n N(u)| over P u X, and only P - N(u) is branched on.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace wsc {

/// Fixed-width bitset sized at run time.
class Bits
{
public:
  Bits() = default;
  explicit Bits(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t bits() const noexcept { return nbits_; }

  void set(std::size_t k) { words_[k >> 6] |= std::uint64_t{1} << (k & 63); }
  void reset(std::size_t k) { words_[k >> 6] &= ~(std::uint64_t{1} << (k & 63)); }
  bool test(std::size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1u; }

  bool none() const noexcept
  {
    for (auto w : words_)
      if (w != 0)
        return false;
    return true;
  }

  std::size_t count() const noexcept
  {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t count_and(const Bits& o) const noexcept
  {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
    return c;
  }

  Bits operator&(const Bits& o) const
  {
    Bits r(nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & o.words_[k];
    return r;
  }

  Bits and_not(const Bits& o) const
  {
    Bits r(nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & ~o.words_[k];
    return r;
  }

  Bits operator|(const Bits& o) const
  {
    Bits r(nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] | o.words_[k];
    return r;
  }

  template <typename F>
  void for_each(F&& f) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k)
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1)
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }

  bool operator==(const Bits&) const = default;

private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Symmetric adjacency; loops are not stored.
class BitGraph
{
public:
  explicit BitGraph(std::size_t order) : rows_(order, Bits(order)) {}

  std::size_t order() const noexcept { return rows_.size(); }

  void add_edge(std::size_t a, std::size_t b)
  {
    if (a == b)
      return;
    rows_[a].set(b);
    rows_[b].set(a);
  }

  bool adjacent(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
  const Bits& row(std::size_t a) const { return rows_[a]; }

private:
  std::vector<Bits> rows_;
};

/// Calls `visit` once per maximal clique, with vertex indices ascending.
inline void for_each_maximal_clique(const BitGraph& g, const std::function<void(const std::vector<std::size_t>&)>& visit)
{
  const std::size_t n = g.order();
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<std::size_t> current;

  std::function<void(Bits, Bits)> expand = [&](Bits cand, Bits done) {
    if (cand.none()) {
      if (done.none()) {
        std::vector<std::size_t> sorted = current;
        std::sort(sorted.begin(), sorted.end());
        visit(sorted);
      }
      return;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      std::size_t c = cand.count_and(g.row(u));
      if (!have || c > best) {
        best = c;
        pivot = u;
        have = true;
      }
    };
    cand.for_each(consider);
    done.for_each(consider);

    Bits branch = cand.and_not(g.row(pivot));
    branch.for_each([&](std::size_t v) {
      current.push_back(v);
      expand(cand & g.row(v), done & g.row(v));
      current.pop_back();
      cand.reset(v);
      done.set(v);
    });
  };

  Bits all(n);
  for (std::size_t v = 0; v < n; ++v)
    all.set(v);
  expand(all, Bits(n));
}

} // namespace wsc
