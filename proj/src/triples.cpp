#include "schur/triples.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

namespace {

// Decoded coordinates for every element of a set, so the inner counting loops
// add digit-wise without re-dividing.
struct CoordTable {
  explicit CoordTable(const ElementSet& a) : g(a.group()) {
    const auto& factors = g.factors();
    k = factors.size();
    elems = a.indices();
    coords.resize(elems.size() * k);
    for (std::size_t e = 0; e < elems.size(); ++e) {
      auto c = g.coords_of(elems[e]);
      std::copy(c.begin(), c.end(), coords.begin() + static_cast<std::ptrdiff_t>(e * k));
    }
    strides.resize(k);
    int64_t s = 1;
    for (std::size_t i = k; i-- > 0;) {
      strides[i] = s;
      s *= factors[i];
    }
  }

  int64_t add(std::size_t e1, std::size_t e2) const {
    const int64_t* c1 = coords.data() + e1 * k;
    const int64_t* c2 = coords.data() + e2 * k;
    int64_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      int64_t c = c1[i] + c2[i];
      if (c >= g.factors()[i]) c -= g.factors()[i];
      idx += c * strides[i];
    }
    return idx;
  }

  const GroupSpec& g;
  std::size_t k = 0;
  std::vector<int64_t> elems;
  std::vector<int64_t> coords;
  std::vector<int64_t> strides;
};

}  // namespace

TripleCount count_schur_naive(const ElementSet& a) {
  const GroupSpec& g = a.group();
  if (g.rank() == 1) {
    const int64_t m = g.order();
    auto elems = a.indices();
    int64_t count = 0;
    for (int64_t x : elems)
      for (int64_t y : elems) {
        int64_t z = x + y;
        if (z >= m) z -= m;
        if (a.contains(z)) ++count;
      }
    return count;
  }
  CoordTable t(a);
  int64_t count = 0;
  const std::size_t sz = t.elems.size();
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j)
      if (a.contains(t.add(i, j))) ++count;
  return count;
}

TripleCount count_schur_transform(const ElementSet& a, ConvPath path) {
  auto r = indicator_self_convolution(a, path);
  int64_t count = 0;
  a.for_each([&](int64_t z) { count += r[static_cast<std::size_t>(z)]; });
  return count;
}

// Triples (u,v,w) with u+v=w that contain a given element x split into three
// disjoint position patterns, each testable in O(|set|):
//   w = x:                (u, x-u, x)
//   u = x, w != x:        (x, v, x+v) with v != 0
//   v = x, u != x, w != x: (u, x, u+x) with u != 0
int64_t schur_delta_add(const ElementSet& a, int64_t x) {
  if (a.contains(x)) throw std::invalid_argument("schur_delta_add: x already in the set");
  const GroupSpec& g = a.group();
  auto in_b = [&](int64_t i) { return i == x || a.contains(i); };  // B = A u {x}
  int64_t delta = 0;
  a.for_each([&](int64_t u) {
    if (in_b(g.add_index(x, g.neg_index(u)))) ++delta;             // (u, x-u, x)
    if (u != 0 && in_b(g.add_index(x, u))) ++delta;                // (x, u, x+u)
    if (u != 0 && in_b(g.add_index(u, x))) ++delta;                // (u, x, u+x)
  });
  if (in_b(g.add_index(x, g.neg_index(x)))) ++delta;               // (x, 0, x) via u = x
  if (x != 0 && in_b(g.add_index(x, x))) ++delta;                  // (x, x, 2x)
  return delta;
}

int64_t st_per_element(const ElementSet& a, int64_t x) {
  if (!a.contains(x)) throw std::invalid_argument("st_per_element: x not in the set");
  const GroupSpec& g = a.group();
  int64_t count = 0;
  a.for_each([&](int64_t u) {
    if (a.contains(g.add_index(x, g.neg_index(u)))) ++count;       // (u, x-u, x)
    if (u != 0 && a.contains(g.add_index(x, u))) ++count;          // (x, u, x+u)
    if (u != x && u != 0 && a.contains(g.add_index(u, x))) ++count;  // (u, x, u+x)
  });
  return count;
}

bool is_sum_free(const ElementSet& a) {
  const GroupSpec& g = a.group();
  auto elems = a.indices();
  for (int64_t x : elems)
    for (int64_t y : elems)
      if (a.contains(g.add_index(x, y))) return false;
  return true;
}

RepresentationProfile representation_profile(const ElementSet& a, const ElementSet& b,
                                             RepMode mode) {
  if (a.group() != b.group())
    throw std::invalid_argument("representation_profile: sets live in different groups");
  const GroupSpec& g = a.group();
  RepresentationProfile out;
  out.r.assign(static_cast<std::size_t>(g.order()), 0);
  a.for_each([&](int64_t x) {
    b.for_each([&](int64_t y) {
      int64_t z = mode == RepMode::Sum ? g.add_index(x, y) : g.add_index(x, g.neg_index(y));
      ++out.r[static_cast<std::size_t>(z)];
    });
  });
  return out;
}

namespace {

// All common differences d (mod p) for which s is an arithmetic progression
// {start, start+d, ..., start+(|s|-1)d}. Wraparound progressions count.
std::vector<int64_t> ap_differences(const ElementSet& s) {
  const GroupSpec& g = s.group();
  const int64_t p = g.order();
  std::vector<int64_t> out;
  const int64_t sz = s.size();
  if (sz == 0) return out;
  for (int64_t d = 1; d < p; ++d) {
    bool any = false;
    for (int64_t start = 0; start < p && !any; ++start) {
      if (!s.contains(start)) continue;
      int64_t cur = start;
      bool ok = true;
      for (int64_t i = 1; i < sz; ++i) {
        cur = g.add_index(cur, d);
        if (!s.contains(cur)) {
          ok = false;
          break;
        }
      }
      if (ok) any = true;
    }
    if (any) out.push_back(d);
  }
  return out;
}

}  // namespace

PollardReport pollard_check(const ElementSet& a, const ElementSet& b, int64_t r) {
  if (a.group() != b.group())
    throw std::invalid_argument("pollard_check: sets live in different groups");
  const GroupSpec& g = a.group();
  if (g.rank() != 1 || !is_prime(g.order()))
    throw std::invalid_argument("pollard_check: ambient group must be Z_p with p prime");
  const int64_t p = g.order();
  if (r < 1 || r > std::min(a.size(), b.size()))
    throw std::invalid_argument("pollard_check: r out of range");

  auto prof = representation_profile(a, b, RepMode::Sum);
  PollardReport rep;
  rep.r = r;
  for (int64_t i = 1; i <= r; ++i) rep.lhs += prof.tail_count(i);
  rep.rhs = r * std::min(p, a.size() + b.size() - r);
  rep.equality = rep.lhs == rep.rhs;
  if (rep.equality) {
    if (std::min(a.size(), b.size()) == r) rep.matched_cases.push_back(1);
    if (a.size() + b.size() >= p + r) rep.matched_cases.push_back(2);
    if (a.size() == r + 1 && b.size() == r + 1) {
      for (int64_t x = 0; x < p; ++x) {
        bool match = true;
        a.for_each([&](int64_t u) {
          if (!b.contains(g.add_index(x, g.neg_index(u)))) match = false;
        });
        if (match) {
          rep.matched_cases.push_back(3);
          break;
        }
      }
    }
    auto da = ap_differences(a);
    auto db = ap_differences(b);
    for (int64_t d : da)
      if (std::find(db.begin(), db.end(), d) != db.end()) {
        rep.matched_cases.push_back(4);
        break;
      }
    if (r == 1 && a.size() + b.size() == p && sumset(a, b).size() == p - 1)
      rep.matched_cases.push_back(5);
  }
  return rep;
}

ElementSet sumset(const ElementSet& a, const ElementSet& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("sumset: sets live in different groups");
  const GroupSpec& g = a.group();
  ElementSet out(g);
  a.for_each([&](int64_t x) { b.for_each([&](int64_t y) { out.insert(g.add_index(x, y)); }); });
  return out;
}

ElementSet difference_set(const ElementSet& a, const ElementSet& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("difference_set: sets live in different groups");
  const GroupSpec& g = a.group();
  ElementSet out(g);
  a.for_each([&](int64_t x) {
    b.for_each([&](int64_t y) { out.insert(g.add_index(x, g.neg_index(y))); });
  });
  return out;
}

SubgroupHandle stabiliser(const ElementSet& s) {
  if (s.empty()) throw std::invalid_argument("stabiliser: set must be nonempty");
  const GroupSpec& g = s.group();
  ElementSet stab(g);
  auto elems = s.indices();
  for (int64_t x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (int64_t e : elems)
      if (!s.contains(g.add_index(e, x))) {
        fixes = false;
        break;
      }
    if (fixes) stab.insert(x);
  }
  return SubgroupHandle{std::move(stab), g.order() / std::max<int64_t>(1, stab.size())};
}

KneserReport kneser_check(const ElementSet& a, const ElementSet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("kneser_check: sets must be nonempty");
  KneserReport rep;
  ElementSet ab = sumset(a, b);
  rep.sumset_size = ab.size();
  if (ab.size() > a.size() + b.size() - 1) return rep;  // hypothesis fails
  rep.applicable = true;
  if (ab.size() == a.group_order()) {
    // A+B = G: the stabiliser is all of G and every shifted set is G
    rep.h_size = rep.a_plus_h = rep.b_plus_h = ab.size();
    rep.pass = true;
    return rep;
  }
  SubgroupHandle h = stabiliser(ab);
  rep.h_size = h.carrier.size();
  rep.a_plus_h = sumset(a, h.carrier).size();
  rep.b_plus_h = sumset(b, h.carrier).size();
  rep.pass = rep.sumset_size == rep.a_plus_h + rep.b_plus_h - rep.h_size;
  return rep;
}

}  // namespace schur
