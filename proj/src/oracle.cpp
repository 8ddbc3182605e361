#include "schur/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "schur/triples.hpp"

namespace schur {

namespace {

// Recursive revolving-door block structure: the t-combinations of an
// m-element universe are the t-combinations avoiding the last element
// followed by the reversed (t-1)-combinations extended with it. Consecutive
// combinations differ by one swap, so the running triple count moves by one
// delta-remove plus one delta-add.
struct DoorSweep {
  const std::vector<int64_t>& universe;
  ElementSet set;
  int64_t st = 0;
  const SweepVisitor& visit;

  void swap_elements(int64_t out_pos, int64_t in_pos) {
    const int64_t out = universe[static_cast<std::size_t>(out_pos)];
    const int64_t in = universe[static_cast<std::size_t>(in_pos)];
    st -= schur_delta_remove(set, out);
    set.erase(out);
    st += schur_delta_add(set, in);
    set.insert(in);
  }

  void run(int64_t m, int64_t t, bool forward) {
    if (t == 0 || t == m) {
      visit(set, st);
      return;
    }
    const int64_t hinge = t >= 2 ? t - 2 : m - 2;
    if (forward) {
      run(m - 1, t, true);
      swap_elements(hinge, m - 1);
      run(m - 1, t - 1, false);
    } else {
      run(m - 1, t - 1, true);
      swap_elements(m - 1, hinge);
      run(m - 1, t, false);
    }
  }
};

}  // namespace

void sweep_combinations(const GroupSpec& g, const std::vector<int64_t>& universe,
                        const std::vector<int64_t>& base, int64_t pick,
                        const SweepVisitor& visit) {
  const int64_t m = static_cast<int64_t>(universe.size());
  if (pick < 0 || pick > m) return;
  DoorSweep sweep{universe, ElementSet(g), 0, visit};
  for (int64_t b : base) {
    sweep.st += schur_delta_add(sweep.set, b);
    sweep.set.insert(b);
  }
  for (int64_t i = 0; i < pick; ++i) {
    sweep.st += schur_delta_add(sweep.set, universe[static_cast<std::size_t>(i)]);
    sweep.set.insert(universe[static_cast<std::size_t>(i)]);
  }
  sweep.run(m, pick, true);
}

namespace {

struct ShardResult {
  int64_t best = INT64_MAX;
  std::vector<ElementSet> minimizers;
  int64_t count = 0;
  int64_t examined = 0;
};

void sweep_shard(const GroupSpec& g, const std::vector<int64_t>& prefix, int64_t a,
                 const OracleOptions& opt, ShardResult& out) {
  std::vector<int64_t> universe;
  const int64_t lo = prefix.empty() ? 0 : prefix.back() + 1;
  for (int64_t i = lo; i < g.order(); ++i) universe.push_back(i);
  const int64_t pick = a - static_cast<int64_t>(prefix.size());
  sweep_combinations(g, universe, prefix, pick, [&](const ElementSet& s, int64_t st) {
    ++out.examined;
    if (st < out.best) {
      out.best = st;
      out.count = 1;
      out.minimizers.clear();
      out.minimizers.push_back(s);
    } else if (st == out.best) {
      ++out.count;
      if (opt.enumerate_all && static_cast<int64_t>(out.minimizers.size()) < opt.minimizer_cap)
        out.minimizers.push_back(s);
    }
  });
}

std::vector<std::vector<int64_t>> shard_prefixes(int64_t n, int64_t a, int64_t length) {
  std::vector<std::vector<int64_t>> out;
  if (length == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int64_t> cur;
  // All ascending prefixes that leave enough room for the remaining a-length picks.
  auto rec = [&](auto&& self, int64_t from) -> void {
    if (static_cast<int64_t>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    const int64_t need = a - static_cast<int64_t>(cur.size());
    for (int64_t v = from; n - v >= need; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

MinimizationResult minimize_symmetric(const GroupSpec& g, int64_t a, const OracleOptions& opt) {
  MinimizationResult res{g, a, 0, {}, 0, 0, 0.0};
  const int64_t n = g.order();
  std::vector<int64_t> combo(static_cast<std::size_t>(a));
  std::iota(combo.begin(), combo.end(), 0);
  int64_t best = INT64_MAX;
  std::vector<std::vector<int64_t>> canonical_minimizers;
  std::vector<int64_t> image;

  auto advance = [&]() -> bool {  // next lexicographic combination
    int64_t i = a - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - a + i) --i;
    if (i < 0) return false;
    ++combo[static_cast<std::size_t>(i)];
    for (int64_t j = i + 1; j < a; ++j)
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    return true;
  };

  if (a == 0) {
    res.f_value = 0;
    res.minimizer_count = 1;
    res.minimizers.push_back(ElementSet(g));
    res.subsets_examined = 1;
    return res;
  }

  do {
    ++res.subsets_examined;
    bool canonical = true;
    for (const auto& map : opt.symmetry_maps) {
      image.clear();
      for (int64_t x : combo) image.push_back(map[static_cast<std::size_t>(x)]);
      std::sort(image.begin(), image.end());
      if (std::lexicographical_compare(image.begin(), image.end(), combo.begin(), combo.end())) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    ElementSet s = ElementSet::from_indices(g, combo);
    int64_t st = count_schur_naive(s);
    if (st < best) {
      best = st;
      canonical_minimizers.clear();
    }
    if (st == best) canonical_minimizers.push_back(combo);
  } while (advance());

  res.f_value = best;
  std::set<std::vector<int64_t>> family;
  for (const auto& rep : canonical_minimizers) {
    for (const auto& map : opt.symmetry_maps) {
      image.clear();
      for (int64_t x : rep) image.push_back(map[static_cast<std::size_t>(x)]);
      std::sort(image.begin(), image.end());
      family.insert(image);
    }
    family.insert(rep);
  }
  res.minimizer_count = static_cast<int64_t>(family.size());
  for (const auto& m : family) {
    if (!opt.enumerate_all && !res.minimizers.empty()) break;
    if (static_cast<int64_t>(res.minimizers.size()) >= opt.minimizer_cap) break;
    res.minimizers.push_back(ElementSet::from_indices(g, m));
  }
  return res;
}

}  // namespace

MinimizationResult brute_force_min(const GroupSpec& g, int64_t a, const OracleOptions& opt) {
  const int64_t n = g.order();
  if (a < 0 || a > n) throw std::invalid_argument("brute_force_min: a out of range [0, |G|]");
  if (n > opt.exhaustive_cap)
    throw std::invalid_argument(
        "brute_force_min: group order exceeds the exhaustive cap; use the sampled falsifier");

  const auto t0 = std::chrono::steady_clock::now();
  MinimizationResult res{g, a, 0, {}, 0, 0, 0.0};

  if (!opt.symmetry_maps.empty()) {
    res = minimize_symmetric(g, a, opt);
  } else {
    const int workers = std::max(1, opt.workers);
    int64_t length = 0;
    while ((int64_t{1} << length) < workers) ++length;
    length = std::min(length, a);
    auto prefixes = shard_prefixes(n, a, length);
    const int64_t shards = static_cast<int64_t>(prefixes.size());

    std::vector<ShardResult> results(static_cast<std::size_t>(workers));
    auto run_worker = [&](int w) {
      const int64_t from = shards * w / workers;
      const int64_t to = shards * (w + 1) / workers;
      for (int64_t i = from; i < to; ++i)
        sweep_shard(g, prefixes[static_cast<std::size_t>(i)], a, opt,
                    results[static_cast<std::size_t>(w)]);
    };
    if (workers == 1) {
      run_worker(0);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
      for (auto& th : threads) th.join();
    }

    int64_t best = INT64_MAX;
    for (const auto& r : results) best = std::min(best, r.best);
    if (best == INT64_MAX)
      throw std::logic_error("brute_force_min: empty sweep");
    res.f_value = best;
    for (const auto& r : results) {
      res.subsets_examined += r.examined;
      if (r.best != best) continue;
      res.minimizer_count += r.count;
      for (const auto& m : r.minimizers) {
        if (!opt.enumerate_all && !res.minimizers.empty()) break;
        if (static_cast<int64_t>(res.minimizers.size()) >= opt.minimizer_cap) break;
        res.minimizers.push_back(m);
      }
    }
  }

  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

FTable f_table(const GroupSpec& g, const OracleOptions& options) {
  FTable table{g, {}, 0};
  table.f.reserve(static_cast<std::size_t>(g.order() + 1));
  for (int64_t a = 0; a <= g.order(); ++a) {
    table.f.push_back(brute_force_min(g, a, options).f_value);
    if (a > 0 && table.f[static_cast<std::size_t>(a)] < table.f[static_cast<std::size_t>(a - 1)])
      throw std::logic_error("f_table: minimum decreased with a");
    if (table.f.back() == 0) table.a_g = a;
  }
  return table;
}

std::optional<ElementSet> sampled_lower_bound_falsifier(const GroupSpec& g, int64_t a,
                                                        const Rational& bound, int64_t trials,
                                                        std::uint64_t seed) {
  const int64_t n = g.order();
  if (a < 0 || a > n) throw std::invalid_argument("sampled_lower_bound_falsifier: a out of range");
  std::mt19937_64 rng(seed);
  std::vector<int64_t> idx(static_cast<std::size_t>(n));
  for (int64_t trial = 0; trial < trials; ++trial) {
    std::iota(idx.begin(), idx.end(), 0);
    for (int64_t i = 0; i < a; ++i) {
      // bounded draw without uniform_int_distribution, for cross-platform determinism
      int64_t j = i + static_cast<int64_t>(rng() % static_cast<std::uint64_t>(n - i));
      std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    ElementSet s = ElementSet::from_indices(g, std::span<const int64_t>(idx.data(),
                                                                        static_cast<std::size_t>(a)));
    if (Rational(count_schur_naive(s)) < bound) return s;
  }
  return std::nullopt;
}

namespace {

std::set<std::vector<int64_t>> family_of(const std::vector<ElementSet>& sets) {
  std::set<std::vector<int64_t>> fam;
  for (const auto& s : sets) fam.insert(s.indices());
  return fam;
}

}  // namespace

StabilityVerdict verify_stability_zp(int64_t p, int64_t a) {
  if (p == 2 || !is_prime(p) || p > 19)
    throw std::invalid_argument("verify_stability_zp: p must be an odd prime <= 19");
  if (a < 0 || a > p) throw std::invalid_argument("verify_stability_zp: a out of range");
  StabilityVerdict v;
  v.theorem = "zp-stability";
  BoundReport formula = zp_min_formula(p, a);
  if (formula.value == Rational(0)) {
    v.applicable = false;
    v.pass = true;
    v.detail = "formula is 0; the characterisation only covers positive minima";
    return v;
  }
  GroupSpec g = make_group({p});
  OracleOptions opt;
  opt.enumerate_all = true;
  MinimizationResult res = brute_force_min(g, a, opt);
  if (Rational(res.f_value) != formula.value) {
    v.pass = false;
    v.detail = "exhaustive minimum " + std::to_string(res.f_value) + " differs from formula " +
               formula.value.str();
    return v;
  }

  OrderingTable ord = zp_middle_ordering(p);
  std::set<std::vector<int64_t>> expected;
  for (int64_t xi = 1; xi < p; ++xi) {
    std::vector<int64_t> image;
    image.reserve(static_cast<std::size_t>(a));
    for (int64_t i = 0; i < a; ++i)
      image.push_back(xi * ord.elements[static_cast<std::size_t>(i)] % p);
    std::sort(image.begin(), image.end());
    expected.insert(std::move(image));
  }
  auto actual = family_of(res.minimizers);
  v.pass = actual == expected;
  v.detail = "minimizers: " + std::to_string(actual.size()) +
             ", dilated prefixes: " + std::to_string(expected.size());
  if (!v.pass) {
    for (const auto& s : actual)
      if (!expected.count(s)) {
        v.counterexample = ElementSet::from_indices(g, s);
        break;
      }
    if (!v.counterexample)
      for (const auto& s : expected)
        if (!actual.count(s)) {
          v.counterexample = ElementSet::from_indices(g, s);
          break;
        }
  }
  return v;
}

StabilityVerdict verify_stability_z2n(int64_t n, int64_t a) {
  if (n < 1 || n > 4) throw std::invalid_argument("verify_stability_z2n: n must be in [1, 4]");
  const int64_t size = int64_t{1} << n;
  if (a < 1 || a > size - 1) throw std::invalid_argument("verify_stability_z2n: a out of range");
  StabilityVerdict v;
  v.theorem = "z2n-stability";
  BoundReport formula = z2n_min_formula(n, a);
  const int64_t k = *formula.k;
  if (k == n) {
    v.pass = true;
    v.detail = "a < 2^(n-1): bound and characterisation are vacuous";
    return v;
  }
  GroupSpec g = make_group(std::vector<int64_t>(static_cast<std::size_t>(n), 2));
  OracleOptions opt;
  opt.enumerate_all = true;
  MinimizationResult res = brute_force_min(g, a, opt);
  if (Rational(res.f_value) != formula.value) {
    v.pass = false;
    v.detail = "exhaustive minimum " + std::to_string(res.f_value) + " differs from formula " +
               formula.value.str();
    return v;
  }

  const int64_t t = a - size + (int64_t{1} << k);
  std::set<std::vector<int64_t>> expected;
  for (const auto& kgroup : subgroups_of_order(g, int64_t{1} << k)) {
    auto members = kgroup.indices();
    // every t-subset of K, kept when sum-free
    std::vector<int64_t> pick(static_cast<std::size_t>(t));
    auto rec = [&](auto&& self, int64_t from, int64_t got) -> void {
      if (got == t) {
        ElementSet s(g);
        for (int64_t i = 0; i < size; ++i)
          if (!kgroup.contains(i)) s.insert(i);  // G \ K
        for (int64_t i = 0; i < t; ++i) s.insert(pick[static_cast<std::size_t>(i)]);
        ElementSet inner(g);
        for (int64_t i = 0; i < t; ++i) inner.insert(pick[static_cast<std::size_t>(i)]);
        if (is_sum_free(inner)) expected.insert(s.indices());
        return;
      }
      for (int64_t i = from; i < static_cast<int64_t>(members.size()); ++i) {
        pick[static_cast<std::size_t>(got)] = members[static_cast<std::size_t>(i)];
        self(self, i + 1, got + 1);
      }
    };
    rec(rec, 0, 0);
  }
  auto actual = family_of(res.minimizers);
  v.pass = actual == expected;
  v.detail = "minimizers: " + std::to_string(actual.size()) +
             ", subgroup-form sets: " + std::to_string(expected.size());
  if (!v.pass) {
    for (const auto& s : actual)
      if (!expected.count(s)) {
        v.counterexample = ElementSet::from_indices(g, s);
        break;
      }
    if (!v.counterexample)
      for (const auto& s : expected)
        if (!actual.count(s)) {
          v.counterexample = ElementSet::from_indices(g, s);
          break;
        }
  }
  return v;
}

StabilityVerdict verify_conjecture_z2n_cyclic(int64_t n) {
  if (n < 0 || n > 4)
    throw std::invalid_argument("verify_conjecture_z2n_cyclic: n must be in [0, 4]");
  StabilityVerdict v;
  v.theorem = "z2n-cyclic-conjecture";
  if (n == 0) {
    v.pass = true;
    v.detail = "trivial group; vacuous";
    return v;
  }
  const int64_t size = int64_t{1} << n;
  GroupSpec g = make_group({size});
  OrderingTable ord = conjectured_z2n_cyclic_ordering(n);
  ElementSet prefix(g);
  int64_t st = 0;
  std::string mismatches;
  for (int64_t a = 0; a <= size; ++a) {
    if (a > 0) {
      int64_t x = ord.elements[static_cast<std::size_t>(a - 1)];
      st += schur_delta_add(prefix, x);
      prefix.insert(x);
    }
    int64_t f = brute_force_min(g, a).f_value;
    if (st != f) {
      if (!mismatches.empty()) mismatches += ", ";
      mismatches += "a=" + std::to_string(a) + " (prefix " + std::to_string(st) + " vs f " +
                    std::to_string(f) + ")";
      if (!v.counterexample) v.counterexample = prefix;
    }
  }
  v.pass = mismatches.empty();
  v.detail = v.pass ? "prefixes attain f_G(a) for every a" : "non-minimal prefixes at " + mismatches;
  return v;
}

std::vector<std::vector<int64_t>> unit_scaling_index_maps(const GroupSpec& g) {
  const int64_t e = g.exponent();
  const int64_t n = g.order();
  std::vector<std::vector<int64_t>> maps;
  for (int64_t u = 1; u < e; ++u) {
    if (std::gcd(u, e) != 1) continue;
    std::vector<int64_t> map(static_cast<std::size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
      auto c = g.coords_of(i);
      for (std::size_t j = 0; j < c.size(); ++j) c[j] = c[j] * u % g.factors()[j];
      map[static_cast<std::size_t>(i)] = g.index_of(c);
    }
    maps.push_back(std::move(map));
  }
  return maps;
}

std::vector<std::vector<int64_t>> coordinate_permutation_index_maps(const GroupSpec& g) {
  const auto& f = g.factors();
  if (!std::all_of(f.begin(), f.end(), [&](int64_t m) { return m == f[0]; }))
    throw std::invalid_argument("coordinate_permutation_index_maps: factors must all be equal");
  if (g.rank() > 8)
    throw std::invalid_argument("coordinate_permutation_index_maps: rank too large");
  const int64_t n = g.order();
  std::vector<std::size_t> perm(static_cast<std::size_t>(g.rank()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int64_t>> maps;
  do {
    std::vector<int64_t> map(static_cast<std::size_t>(n));
    std::vector<int64_t> permuted(perm.size());
    for (int64_t i = 0; i < n; ++i) {
      auto c = g.coords_of(i);
      for (std::size_t j = 0; j < perm.size(); ++j) permuted[j] = c[perm[j]];
      map[static_cast<std::size_t>(i)] = g.index_of(permuted);
    }
    maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

ElementSet apply_index_map(const ElementSet& s, const std::vector<int64_t>& map) {
  ElementSet out(s.group());
  s.for_each([&](int64_t i) { out.insert(map[static_cast<std::size_t>(i)]); });
  return out;
}

std::vector<ElementSet> subgroups_of_order(const GroupSpec& g, int64_t order) {
  const int64_t n = g.order();
  if (n > 20) throw std::invalid_argument("subgroups_of_order: group too large for mask sweep");
  if (order < 1 || n % order != 0) return {};
  std::vector<ElementSet> out;
  const std::uint32_t limit = static_cast<std::uint32_t>(1) << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (!(mask & 1)) continue;  // must contain 0
    if (static_cast<int64_t>(std::popcount(mask)) != order) continue;
    bool closed = true;
    for (int64_t x = 0; x < n && closed; ++x) {
      if (!((mask >> x) & 1)) continue;
      for (int64_t y = x; y < n && closed; ++y) {
        if (!((mask >> y) & 1)) continue;
        if (!((mask >> g.add_index(x, y)) & 1)) closed = false;
      }
    }
    if (!closed) continue;
    ElementSet s(g);
    for (int64_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.insert(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace schur
