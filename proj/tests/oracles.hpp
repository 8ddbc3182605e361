#pragma once

// Test-only reference implementations, kept deliberately independent of the
// library code paths they check: triple counting by full cubic enumeration,
// edge counting by explicit pair scans, and exhaustive sum-free search.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "schur/group.hpp"

namespace schur::testing {

// |{(x,y,z) in A^3 : x+y=z}| by enumerating all |A|^3 triples.
inline int64_t st_cubic(const ElementSet& a) {
  const GroupSpec& g = a.group();
  auto elems = a.indices();
  int64_t count = 0;
  for (int64_t x : elems)
    for (int64_t y : elems)
      for (int64_t z : elems)
        if (g.add_index(x, y) == z) ++count;
  return count;
}

inline bool sum_free_cubic(const ElementSet& a) { return st_cubic(a) == 0; }

// Number of ordered Schur triples of A containing x in some position, each
// triple counted once.
inline int64_t st_containing_cubic(const ElementSet& a, int64_t x) {
  const GroupSpec& g = a.group();
  auto elems = a.indices();
  int64_t count = 0;
  for (int64_t u : elems)
    for (int64_t v : elems) {
      int64_t w = g.add_index(u, v);
      if (a.contains(w) && (u == x || v == x || w == x)) ++count;
    }
  return count;
}

// Ordered pairs (x,y) in U^2 with x-y in A: twice the induced edge count of
// the undirected Cayley graph when A = -A and 0 is excluded.
inline int64_t induced_degree_sum(const ElementSet& a, const ElementSet& u) {
  const GroupSpec& g = a.group();
  auto elems = u.indices();
  int64_t count = 0;
  for (int64_t x : elems)
    for (int64_t y : elems)
      if (a.contains(g.add_index(x, g.neg_index(y)))) ++count;
  return count;
}

// Arcs (x,y) in U^2 with y-x in A (loops included).
inline int64_t induced_arcs(const ElementSet& a, const ElementSet& u) {
  const GroupSpec& g = a.group();
  auto elems = u.indices();
  int64_t count = 0;
  for (int64_t x : elems)
    for (int64_t y : elems)
      if (a.contains(g.add_index(y, g.neg_index(x)))) ++count;
  return count;
}

// Size of the largest sum-free subset, by exhaustive mask search. |G| <= 24.
inline int64_t max_sumfree_by_search(const GroupSpec& g) {
  const int64_t n = g.order();
  int64_t best = 0;
  std::vector<int64_t> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<int64_t>(std::popcount(mask)) <= best) continue;
    members.clear();
    for (int64_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) members.push_back(i);
    bool ok = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i)
      for (std::size_t j = 0; j < members.size() && ok; ++j) {
        int64_t s = g.add_index(members[i], members[j]);
        if ((mask >> s) & 1) ok = false;
      }
    if (ok) best = static_cast<int64_t>(members.size());
  }
  return best;
}

inline ElementSet random_subset(const GroupSpec& g, int64_t size, std::mt19937_64& rng) {
  std::vector<int64_t> idx(static_cast<std::size_t>(g.order()));
  for (int64_t i = 0; i < g.order(); ++i) idx[static_cast<std::size_t>(i)] = i;
  for (int64_t i = 0; i < size; ++i) {
    int64_t j = i + static_cast<int64_t>(rng() % static_cast<std::uint64_t>(g.order() - i));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  return ElementSet::from_indices(g, std::span<const int64_t>(idx.data(),
                                                              static_cast<std::size_t>(size)));
}

}  // namespace schur::testing
