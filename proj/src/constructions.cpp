#include "schur/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "schur/triples.hpp"

namespace schur {

std::string BoundReport::theorem_name(Theorem t) {
  switch (t) {
    case Theorem::Zp:
      return "zp";
    case Theorem::TypeI:
      return "typeI";
    case Theorem::Z2n:
      return "z2n";
    case Theorem::Z3n:
      return "z3n";
    case Theorem::Z3ZpUpper:
      return "z3zp-upper";
    case Theorem::Spectral:
      return "spectral";
  }
  return "?";
}

OrderingTable zp_middle_ordering(int64_t p) {
  if (p > kDefaultDenseCap) throw std::invalid_argument("zp_middle_ordering: p too large");
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("zp_middle_ordering: p must be an odd prime");
  OrderingTable t;
  t.modulus = p;
  t.elements.reserve(static_cast<std::size_t>(p));
  const int64_t mid = (p - 1) / 2;
  t.elements.push_back(mid);
  for (int64_t i = 1; static_cast<int64_t>(t.elements.size()) < p; ++i) {
    t.elements.push_back(mid + i);             // x_{2i}
    if (static_cast<int64_t>(t.elements.size()) < p)
      t.elements.push_back(mid - i);           // x_{2i+1}
  }
  return t;
}

BoundReport zp_min_formula(int64_t p, int64_t a) {
  if (p > kDefaultDenseCap) throw std::invalid_argument("zp_min_formula: p too large");
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("zp_min_formula: p must be an odd prime");
  if (a < 0 || a > p) throw std::invalid_argument("zp_min_formula: a out of range [0, p]");
  BoundReport rep;
  rep.id = BoundReport::Theorem::Zp;
  rep.p = p;
  rep.a = a;
  if (3 * a <= p + 1) {
    rep.value = Rational(0);
  } else {
    int64_t q = 3 * a - p;
    rep.value = Rational(q / 2) * Rational((q + 1) / 2);
  }
  return rep;
}

ElementSet typeI_construction(const GroupSpec& g, int64_t p, int64_t t, std::uint64_t seed) {
  GroupTypeTag tag = classify_group_type(g);
  if (tag.kind != GroupTypeTag::Kind::TypeI || tag.param != p)
    throw std::invalid_argument("typeI_construction: group is not of type I(" +
                                std::to_string(p) + "), it is " + tag.str());
  if (t < 0) throw std::invalid_argument("typeI_construction: t must be >= 0");
  const int64_t k = (p - 2) / 3;
  CyclicHom phi = surjections_to_cyclic(g, p).front();

  ElementSet base(g);
  ElementSet pool(g);
  for (int64_t i = 0; i < g.order(); ++i) {
    int64_t v = phi.apply_index(g, i);
    if (v >= k + 1 && v <= 2 * k + 1) base.insert(i);
    if (v == k) pool.insert(i);
  }
  ElementSet extra = greedy_sum_free_subset(pool, t, seed);
  extra.for_each([&](int64_t i) { base.insert(i); });
  const int64_t expected = g.order() / p * (k + 1) + t;
  if (base.size() != expected)
    throw std::logic_error("typeI_construction: cardinality mismatch");
  return base;
}

BoundReport typeI_bound(const GroupSpec& g, int64_t p, int64_t t, Rational delta) {
  if (t < 0) throw std::invalid_argument("typeI_bound: t must be >= 0");
  BoundReport rep;
  rep.id = BoundReport::Theorem::TypeI;
  rep.p = p;
  rep.t = t;
  GroupTypeTag tag = classify_group_type(g);
  if (tag.kind != GroupTypeTag::Kind::TypeI || tag.param != p) {
    rep.applicable = false;
    rep.reason = "group is of type " + tag.str() + ", not I(" + std::to_string(p) + ")";
    rep.value = Rational(0);
    return rep;
  }
  const int64_t n = g.order();
  if (t > n) throw std::invalid_argument("typeI_bound: t exceeds the group order");
  rep.value = Rational(3) * Rational(t) * Rational(n / p) +
              (p != 2 ? Rational(t) * Rational(t) : Rational(0));
  if (Rational(t) > delta * Rational(n, p)) {
    rep.applicable = false;
    rep.reason = "t exceeds delta*|G|/p = (" + (delta * Rational(n, p)).str() +
                 "); value is the formula, not a validated minimum";
  }
  return rep;
}

ElementSet z2n_extremal_set(int64_t n, int64_t a) {
  if (n < 1 || n > 24) throw std::invalid_argument("z2n_extremal_set: n out of range");
  const int64_t size = int64_t{1} << n;
  if (a < 1 || a > size - 1)
    throw std::invalid_argument("z2n_extremal_set: a out of range [1, 2^n - 1]");
  GroupSpec g = make_group(std::vector<int64_t>(static_cast<std::size_t>(n), 2));
  ElementSet s(g);
  for (int64_t v = size - a; v < size; ++v) s.insert(v);
  return s;
}

BoundReport z2n_min_formula(int64_t n, int64_t a) {
  if (n < 1 || n > 30) throw std::invalid_argument("z2n_min_formula: n out of range [1, 30]");
  const int64_t size = int64_t{1} << n;
  if (a < 1 || a > size - 1)
    throw std::invalid_argument("z2n_min_formula: a out of range [1, 2^n - 1]");
  int64_t k = 0;
  while ((int64_t{1} << k) < size - a) ++k;  // smallest k with 2^n - 2^k <= a
  BoundReport rep;
  rep.id = BoundReport::Theorem::Z2n;
  rep.n = n;
  rep.a = a;
  rep.k = k;
  rep.value = Rational(3 * a + (int64_t{1} << k) - 2 * size) * Rational(size - (int64_t{1} << k));
  return rep;
}

ElementSet z3n_construction(int64_t n, int64_t t, std::uint64_t seed) {
  if (n < 1 || n > 15) throw std::invalid_argument("z3n_construction: n out of range");
  if (t < 0) throw std::invalid_argument("z3n_construction: t must be >= 0");
  GroupSpec g = make_group(std::vector<int64_t>(static_cast<std::size_t>(n), 3));
  const int64_t third = g.order() / 3;
  ElementSet pool(g);
  for (int64_t i = 2 * third; i < 3 * third; ++i) pool.insert(i);  // coset x_1 = 2
  ElementSet extra = greedy_sum_free_subset(pool, t, seed);
  ElementSet out(g);
  for (int64_t i = third; i < 2 * third; ++i) out.insert(i);       // coset x_1 = 1
  extra.for_each([&](int64_t i) { out.insert(i); });
  return out;
}

BoundReport z3n_bound(int64_t n, int64_t t, Rational delta) {
  if (n < 1) throw std::invalid_argument("z3n_bound: n must be >= 1");
  if (t < 0) throw std::invalid_argument("z3n_bound: t must be >= 0");
  int64_t third = 1;
  for (int64_t i = 1; i < n && i < 16; ++i) third *= 3;
  if (n > 16 || t > 3 * third)
    throw std::invalid_argument("z3n_bound: parameters outside the supported range");
  BoundReport rep;
  rep.id = BoundReport::Theorem::Z3n;
  rep.n = n;
  rep.t = t;
  rep.value = Rational(third) * Rational(t) + Rational(t) * Rational(t);
  if (Rational(t) > delta * Rational(third)) {
    rep.applicable = false;
    rep.reason = "t exceeds delta*3^(n-1) = (" + (delta * Rational(third)).str() +
                 "); value is the formula, not a validated minimum";
  }
  return rep;
}

ElementSet z3zp_construction(int64_t p, int64_t a) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("z3zp_construction: p must be an odd prime");
  if (a < p + 1 || a > 3 * p)
    throw std::invalid_argument("z3zp_construction: a out of range (p, 3p]");
  const int64_t b = 3 * ((a + 2) / 3);
  const int64_t m = b / 3;
  OrderingTable ord = zp_middle_ordering(p);
  GroupSpec g = make_group({3, p});
  ElementSet set(g);
  for (int64_t i = 0; i < 3; ++i)
    for (int64_t j = 0; j < m; ++j) set.insert(i * p + ord.elements[static_cast<std::size_t>(j)]);
  // Trim back down to a elements, dropping whichever element sits in the most
  // triples (smallest index on ties).
  for (int64_t drop = 0; drop < b - a; ++drop) {
    int64_t best = -1, best_count = -1;
    set.for_each([&](int64_t x) {
      int64_t c = st_per_element(set, x);
      if (c > best_count) {
        best_count = c;
        best = x;
      }
    });
    set.erase(best);
  }
  const int64_t st = count_schur_naive(set);
  if (st > 21 * (a - p) * (a - p))
    throw std::logic_error("z3zp_construction: ST exceeds 21(a-p)^2");
  return set;
}

RemovalReport sumfree_removal(const ElementSet& a, const Rational& eps) {
  if (eps <= Rational(0)) throw std::invalid_argument("sumfree_removal: eps must be positive");
  const GroupSpec& g = a.group();
  const int64_t n = g.order();
  const Rational eps_n = eps * Rational(n);

  ElementSet heavy(g);  // C
  a.for_each([&](int64_t x) {
    int64_t reps = 0;
    a.for_each([&](int64_t y) {
      if (a.contains(g.add_index(x, g.neg_index(y)))) ++reps;  // y + (x-y) = x
    });
    if (Rational(reps) >= eps_n) heavy.insert(x);
  });

  ElementSet trimmed = ElementSet(g);  // A'
  a.for_each([&](int64_t x) {
    if (!heavy.contains(x)) trimmed.insert(x);
  });

  RemovalReport rep{ElementSet(g), 0, 0, false, false, false};
  rep.c_size = heavy.size();
  if (!trimmed.empty()) {
    ElementSet diffs = difference_set(trimmed, trimmed);
    trimmed.for_each([&](int64_t x) {
      if (diffs.contains(x))
        ++rep.overlap;
      else
        rep.result.insert(x);
    });
  }
  rep.preconditions_met =
      Rational(a.size()) >= (Rational(1, 3) + eps) * Rational(n) &&
      Rational(count_schur_naive(a)) * Rational(2) <= eps * eps * Rational(n * n);
  rep.result_sum_free = is_sum_free(rep.result);
  rep.removal_within_eps = Rational(a.size() - rep.result.size()) <= eps_n;
  return rep;
}

namespace {

struct GreedySearch {
  const ElementSet& pool;
  std::vector<int64_t> order;
  ElementSet current;
  int64_t budget;

  bool extend(std::size_t from, int64_t remaining) {
    if (remaining == 0) return true;
    if (order.size() - from < static_cast<std::size_t>(remaining)) return false;
    for (std::size_t pos = from; pos + static_cast<std::size_t>(remaining) <= order.size(); ++pos) {
      if (--budget <= 0)
        throw std::runtime_error(
            "greedy_sum_free_subset: search budget exhausted before finding a subset");
      int64_t x = order[pos];
      if (schur_delta_add(current, x) == 0) {
        current.insert(x);
        if (extend(pos + 1, remaining - 1)) return true;
        current.erase(x);
      }
    }
    return false;
  }
};

}  // namespace

ElementSet greedy_sum_free_subset(const ElementSet& pool, int64_t t, std::uint64_t seed) {
  if (t < 0) throw std::invalid_argument("greedy_sum_free_subset: t must be >= 0");
  GreedySearch search{pool, pool.indices(), ElementSet(pool.group()),
                      pool.size() <= 24 ? int64_t{1} << 62 : int64_t{5'000'000}};
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(search.order.begin(), search.order.end(), rng);
  }
  if (!search.extend(0, t))
    throw std::invalid_argument("greedy_sum_free_subset: no sum-free subset of size " +
                                std::to_string(t) + " exists in the pool");
  return std::move(search.current);
}

OrderingTable conjectured_z2n_cyclic_ordering(int64_t n) {
  if (n < 0 || n > 24) throw std::invalid_argument("conjectured_z2n_cyclic_ordering: n out of range");
  std::vector<int64_t> cur{0};
  for (int64_t step = 0; step < n; ++step) {
    std::vector<int64_t> next;
    next.reserve(cur.size() * 2);
    for (int64_t x : cur) next.push_back(2 * x + 1);
    for (int64_t x : cur) next.push_back(2 * x);
    cur = std::move(next);
  }
  return OrderingTable{int64_t{1} << n, std::move(cur)};
}

}  // namespace schur
