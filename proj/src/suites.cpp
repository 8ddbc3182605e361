#include "schur/suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <stdexcept>

#include "schur/constructions.hpp"
#include "schur/oracle.hpp"
#include "schur/spectral.hpp"
#include "schur/triples.hpp"

namespace schur {

namespace {

struct SuiteRun {
  SuiteResult r;

  void check(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) {
      ++r.failures;
      if (r.first_failure.empty()) r.first_failure = what;
    }
  }
  void note(std::string s) { r.notes.push_back(std::move(s)); }
};

std::string fmt_int(int64_t v) { return std::to_string(v); }

// ---------------------------------------------------------------- AC-1/AC-2

std::vector<int64_t> zp_primes(const SuiteOptions& opt, std::vector<int64_t> defaults) {
  if (!opt.p) return defaults;
  return {*opt.p};
}

void ac1(SuiteRun& run, const SuiteOptions& opt) {
  for (int64_t p : zp_primes(opt, {3, 5, 7, 11, 13})) {
    GroupSpec g = make_group({p});
    OracleOptions oopt;
    oopt.workers = opt.workers;
    FTable table = f_table(g, oopt);
    bool all = true;
    for (int64_t a = 0; a <= p; ++a) {
      int64_t want = zp_min_formula(p, a).value.as_integer();
      bool ok = table.f[static_cast<std::size_t>(a)] == want;
      all = all && ok;
      run.check(ok, "f_Z" + fmt_int(p) + "(" + fmt_int(a) + ") = " +
                        fmt_int(table.f[static_cast<std::size_t>(a)]) + ", formula says " +
                        fmt_int(want));
    }
    run.note("p=" + fmt_int(p) + ": exhaustive f equals the formula for every a" +
             std::string(all ? "" : " FAILED"));
  }
}

void ac2(SuiteRun& run, const SuiteOptions& opt) {
  for (int64_t p : zp_primes(opt, {5, 7, 11})) {
    int64_t covered = 0;
    for (int64_t a = 0; a <= p; ++a) {
      if (zp_min_formula(p, a).value == Rational(0)) continue;
      ++covered;
      StabilityVerdict v = verify_stability_zp(p, a);
      run.check(v.pass, "zp stability p=" + fmt_int(p) + " a=" + fmt_int(a) + ": " + v.detail);
    }
    run.note("p=" + fmt_int(p) + ": minimizer families equal the dilated prefixes for all " +
             fmt_int(covered) + " positive-minimum cardinalities");
  }
}

// --------------------------------------------------------------------- AC-3

void ac3(SuiteRun& run, const SuiteOptions& opt) {
  std::vector<int64_t> ns = opt.n ? std::vector<int64_t>{*opt.n}
                                  : std::vector<int64_t>{1, 2, 3, 4};
  for (int64_t n : ns) {
    GroupSpec g = make_group(std::vector<int64_t>(static_cast<std::size_t>(n), 2));
    OracleOptions oopt;
    oopt.workers = opt.workers;
    FTable table = f_table(g, oopt);
    for (int64_t a = 1; a < (int64_t{1} << n); ++a) {
      int64_t want = z2n_min_formula(n, a).value.as_integer();
      run.check(table.f[static_cast<std::size_t>(a)] == want,
                "f_Z2^" + fmt_int(n) + "(" + fmt_int(a) + ") = " +
                    fmt_int(table.f[static_cast<std::size_t>(a)]) + ", formula says " +
                    fmt_int(want));
    }
    run.note("n=" + fmt_int(n) + ": f table matches the closed form (" +
             fmt_int((int64_t{1} << n) - 1) + " cardinalities)");
    if (n <= 3) {
      for (int64_t a = 1; a < (int64_t{1} << n); ++a) {
        StabilityVerdict v = verify_stability_z2n(n, a);
        run.check(v.pass,
                  "z2n stability n=" + fmt_int(n) + " a=" + fmt_int(a) + ": " + v.detail);
      }
      run.note("n=" + fmt_int(n) + ": every minimizer matches the subgroup-K form");
    }
  }
}

// --------------------------------------------------------------------- AC-4

void ac4(SuiteRun& run, const SuiteOptions& opt) {
  struct Case {
    std::vector<int64_t> factors;
    int64_t p;
    int64_t tmax;
  };
  for (const auto& c : {Case{{10}, 2, 2}, Case{{25}, 5, 1}, Case{{2, 2}, 2, 0}}) {
    GroupSpec g = make_group(c.factors);
    for (int64_t t = 0; t <= c.tmax; ++t) {
      ElementSet a = typeI_construction(g, c.p, t);
      int64_t st = count_schur_naive(a);
      int64_t want = typeI_bound(g, c.p, t).value.as_integer();
      run.check(st == want, "typeI " + format_group_spec(g) + " t=" + fmt_int(t) + ": ST " +
                                fmt_int(st) + " vs bound " + fmt_int(want));
    }
  }
  run.note("construction equals the bound on (Z10,2,t<=2), (Z25,5,t<=1), (Z2^2,2,0)");

  GroupSpec z10 = make_group({10});
  OracleOptions oopt;
  oopt.workers = opt.workers;
  for (int64_t t = 0; t <= 2; ++t) {
    int64_t f = brute_force_min(z10, 5 + t, oopt).f_value;
    int64_t want = typeI_bound(z10, 2, t).value.as_integer();
    run.check(f == want, "f_Z10(" + fmt_int(5 + t) + ") = " + fmt_int(f) + ", bound " +
                             fmt_int(want));
  }
  run.note("exhaustive f over Z10 confirms the bound is the true minimum for t in {0,1,2}");
}

// --------------------------------------------------------------------- AC-5

void ac5(SuiteRun& run, const SuiteOptions& opt) {
  GroupSpec z9 = make_group({3, 3});
  OracleOptions oopt;
  oopt.workers = opt.workers;
  FTable table = f_table(z9, oopt);
  // covered range: t <= floor(delta * 3^(n-1)) = 0 at the default delta 1/1000
  const int64_t covered_tmax = 0;
  for (int64_t t = 0; t <= covered_tmax; ++t)
    run.check(table.f[static_cast<std::size_t>(3 + t)] == 3 * t + t * t,
              "f_Z3^2(3+" + fmt_int(t) + ") differs from the bound inside the covered range");
  for (int64_t t = 0; t <= 6; ++t) {
    int64_t f = table.f[static_cast<std::size_t>(3 + t)];
    int64_t formula = 3 * t + t * t;
    run.note("record: f_Z3^2(3+" + fmt_int(t) + ") = " + fmt_int(f) + ", formula " +
             fmt_int(formula) + (f == formula ? " (equal)" : " (diverges beyond range)"));
  }
  for (int64_t t = 0; t <= 3; ++t) {
    ElementSet a = z3n_construction(2, t);
    run.check(count_schur_naive(a) == 3 * t + t * t,
              "z3n construction n=2 t=" + fmt_int(t) + " misses the bound");
  }
  for (int64_t t = 0; t <= 3; ++t) {
    ElementSet a = z3n_construction(3, t);
    run.check(count_schur_naive(a) == 9 * t + t * t,
              "z3n construction n=3 t=" + fmt_int(t) + " misses the bound");
  }
  run.note("constructions attain 3^(n-1)t + t^2 for n in {2,3}, t <= 3");

  GroupSpec z27 = make_group({3, 3, 3});
  auto cex = sampled_lower_bound_falsifier(z27, 10, Rational(10), 100000, opt.seed);
  run.check(!cex.has_value(), "sampled falsifier found a 10-subset of Z_3^3 with ST < 10");
  run.note("10^5-trial falsifier found no violation of the n=3, t=1 bound (seed " +
           fmt_int(static_cast<int64_t>(opt.seed)) + ")");
}

// --------------------------------------------------------------------- AC-6

void ac6(SuiteRun& run, const SuiteOptions& opt) {
  for (int64_t p : zp_primes(opt, {7, 13})) {
    for (int64_t a = p + 1; a <= 3 * p; ++a) {
      ElementSet b = z3zp_construction(p, a);
      int64_t st = count_schur_naive(b);
      run.check(b.size() == a, "z3zp p=" + fmt_int(p) + " a=" + fmt_int(a) + ": wrong size");
      run.check(st <= 21 * (a - p) * (a - p),
                "z3zp p=" + fmt_int(p) + " a=" + fmt_int(a) + ": ST " + fmt_int(st) +
                    " > 21(a-p)^2");
      if (a % 3 == 0) {
        int64_t product = 9 * ((a - p) / 2) * ((a - p + 1) / 2);
        run.check(st == product, "z3zp p=" + fmt_int(p) + " a=" + fmt_int(a) +
                                     ": product identity gives " + fmt_int(product) +
                                     ", construction has " + fmt_int(st));
      }
    }
    run.note("p=" + fmt_int(p) + ": all a in (p, 3p] bounded by 21(a-p)^2; multiples of 3 " +
             "match 9*floor((b-p)/2)*ceil((b-p)/2) exactly");
  }
}

// --------------------------------------------------------------------- AC-7

void ac7(SuiteRun& run, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed + 7);
  int64_t instances = 0, attempts = 0;
  while (instances < 1000 && attempts < 100000) {
    ++attempts;
    // Even-order groups up to 200; the odd fiber of a surjection to Z_2 is a
    // sum-free base with density 1/2, which leaves room for any eps <= 1/7.
    GroupSpec g = [&] {
      switch (rng() % 3) {
        case 0:
          return make_group({4 + static_cast<int64_t>(rng() % 99) * 2});  // even m in [4, 200]
        case 1:
          return make_group({2, 2 + static_cast<int64_t>(rng() % 99)});
        default:
          return make_group({2, 2, 2 + static_cast<int64_t>(rng() % 49)});
      }
    }();
    const int64_t n = g.order();
    if (n > 200) continue;
    Rational eps(1, 7 + static_cast<int64_t>(rng() % 6));

    ElementSet base = typeI_construction(g, 2, 0);  // even order: type I(2)
    // prune to the smallest size satisfying the density precondition
    int64_t target = 0;
    while (Rational(target) < (Rational(1, 3) + eps) * Rational(n)) ++target;
    ElementSet a(g);
    for (int64_t i : base.indices()) {
      if (a.size() >= target) break;
      a.insert(i);
    }
    // a few extra elements, kept only while the triple budget allows
    int64_t extras = static_cast<int64_t>(rng() % 4);
    for (int64_t e = 0; e < extras; ++e) {
      int64_t x = static_cast<int64_t>(rng() % static_cast<std::uint64_t>(n));
      if (a.contains(x)) continue;
      a.insert(x);
      if (Rational(2 * count_schur_naive(a)) > eps * eps * Rational(n * n)) a.erase(x);
    }
    if (Rational(a.size()) < (Rational(1, 3) + eps) * Rational(n)) continue;
    if (Rational(2 * count_schur_naive(a)) > eps * eps * Rational(n * n)) continue;

    ++instances;
    RemovalReport rep = sumfree_removal(a, eps);
    run.check(rep.preconditions_met && rep.result_sum_free && rep.removal_within_eps,
              "removal failed on " + format_group_spec(g) + " |A|=" + fmt_int(a.size()) +
                  " eps=" + eps.str());
  }
  run.check(instances == 1000, "could not generate 1000 precondition-satisfying instances");
  run.note("1000 random instances over groups of order <= 200: B always sum-free, |A\\B| <= eps*n");
}

// --------------------------------------------------------------------- AC-8

struct MaskGroup {
  GroupSpec g;
  int64_t n;
  // shifted(x, mask) = { x + y : y in mask } via byte lookups
  std::vector<std::array<std::uint32_t, 256>> low;
  std::vector<std::array<std::uint32_t, 16>> high;

  explicit MaskGroup(GroupSpec spec) : g(std::move(spec)), n(g.order()) {
    low.resize(static_cast<std::size_t>(n));
    high.resize(static_cast<std::size_t>(n));
    for (int64_t x = 0; x < n; ++x) {
      for (int64_t b = 0; b < 256; ++b) {
        std::uint32_t mask = 0;
        for (int64_t j = 0; j < 8 && j < n; ++j)
          if ((b >> j) & 1) mask |= std::uint32_t{1} << g.add_index(x, j);
        low[static_cast<std::size_t>(x)][static_cast<std::size_t>(b)] = mask;
      }
      for (int64_t b = 0; b < 16; ++b) {
        std::uint32_t mask = 0;
        for (int64_t j = 0; j < 4 && j + 8 < n; ++j)
          if ((b >> j) & 1) mask |= std::uint32_t{1} << g.add_index(x, j + 8);
        high[static_cast<std::size_t>(x)][static_cast<std::size_t>(b)] = mask;
      }
    }
  }

  std::uint32_t sumset_mask(std::uint32_t ma, std::uint32_t mb) const {
    std::uint32_t acc = 0;
    std::uint32_t rest = ma;
    while (rest) {
      int x = std::countr_zero(rest);
      rest &= rest - 1;
      acc |= low[static_cast<std::size_t>(x)][mb & 0xff] |
             high[static_cast<std::size_t>(x)][(mb >> 8) & 0xf];
    }
    return acc;
  }
};

ElementSet set_of_mask(const GroupSpec& g, std::uint32_t mask) {
  ElementSet s(g);
  while (mask) {
    int x = std::countr_zero(mask);
    mask &= mask - 1;
    s.insert(x);
  }
  return s;
}

void ac8(SuiteRun& run, const SuiteOptions& opt) {
  // Pollard, exhaustively
  for (int64_t p : zp_primes(opt, {5, 7})) {
    GroupSpec g = make_group({p});
    int64_t equalities = 0;
    bool all_hold = true, all_matched = true;
    for (std::uint64_t ma = 1; ma < (std::uint64_t{1} << p); ++ma)
      for (std::uint64_t mb = ma; mb < (std::uint64_t{1} << p); ++mb) {
        ElementSet a(g), b(g);
        for (int64_t i = 0; i < p; ++i) {
          if ((ma >> i) & 1) a.insert(i);
          if ((mb >> i) & 1) b.insert(i);
        }
        auto prof = representation_profile(a, b, RepMode::Sum);
        int64_t lhs = 0;
        for (int64_t r = 1; r <= std::min(a.size(), b.size()); ++r) {
          lhs += prof.tail_count(r);
          int64_t rhs = r * std::min(p, a.size() + b.size() - r);
          if (lhs < rhs) all_hold = false;
          if (lhs == rhs) {
            ++equalities;
            auto rep = pollard_check(a, b, r);
            if (rep.matched_cases.empty()) all_matched = false;
          }
        }
      }
    run.check(all_hold, "Pollard inequality violated for p=" + fmt_int(p));
    run.check(all_matched, "Pollard equality with no stability case, p=" + fmt_int(p));
    run.note("p=" + fmt_int(p) + ": inequality holds on all unordered (A,B,r); " +
             fmt_int(equalities) + " equalities, each matching a stability case");
  }

  // Kneser over all abelian groups of order <= 12 (up to isomorphism)
  const std::vector<std::vector<int64_t>> group_shapes = {
      {2}, {3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {2, 2, 2},
      {9}, {3, 3}, {10}, {11}, {12}, {2, 6}};
  std::mt19937_64 rng(opt.seed + 8);
  for (const auto& shape : group_shapes) {
    MaskGroup mg(make_group(shape));
    const int64_t n = mg.n;
    const std::uint32_t limit = std::uint32_t{1} << n;
    int64_t applicable = 0;
    bool all_pass = true;
    std::string fail;
    for (std::uint32_t ma = 1; ma < limit && all_pass; ++ma) {
      const int64_t pa = std::popcount(ma);
      for (std::uint32_t mb = ma; mb < limit; ++mb) {
        const int64_t pb = std::popcount(mb);
        std::uint32_t sum = mg.sumset_mask(ma, mb);
        if (std::popcount(sum) > pa + pb - 1) continue;
        ++applicable;
        ElementSet a = set_of_mask(mg.g, ma);
        ElementSet b = set_of_mask(mg.g, mb);
        KneserReport rep = kneser_check(a, b);
        if (!rep.applicable || !rep.pass ||
            rep.sumset_size != std::popcount(sum)) {
          all_pass = false;
          fail = "kneser failed on " + format_group_spec(mg.g) + " ma=" + fmt_int(ma) +
                 " mb=" + fmt_int(mb);
          break;
        }
      }
    }
    // cross-check the mask prefilter against the library sumset on samples
    for (int s = 0; s < 200; ++s) {
      std::uint32_t ma = static_cast<std::uint32_t>(rng() % limit);
      std::uint32_t mb = static_cast<std::uint32_t>(rng() % limit);
      if (!ma || !mb) continue;
      int64_t lib = sumset(set_of_mask(mg.g, ma), set_of_mask(mg.g, mb)).size();
      if (lib != std::popcount(mg.sumset_mask(ma, mb))) {
        all_pass = false;
        fail = "mask prefilter disagrees with sumset on " + format_group_spec(mg.g);
      }
    }
    run.check(all_pass, fail);
    run.note(format_group_spec(mg.g) + ": Kneser identity holds on all " + fmt_int(applicable) +
             " applicable pairs");
  }
}

// --------------------------------------------------------------------- AC-9

int64_t degree_sum(const ElementSet& a, const ElementSet& u) {
  const GroupSpec& g = a.group();
  auto elems = u.indices();
  int64_t count = 0;
  for (int64_t x : elems)
    for (int64_t y : elems)
      if (a.contains(g.add_index(x, g.neg_index(y)))) ++count;
  return count;
}

void ac9(SuiteRun& run, const SuiteOptions& opt) {
  const std::vector<std::vector<int64_t>> shapes = {
      {2, 2, 2, 2, 2, 2}, {3, 3, 3}, {2, 2, 2}, {12}, {5, 7}, {6, 6}, {100}, {128},
      {3, 3, 3, 3}, {250}};
  std::mt19937_64 rng(opt.seed + 9);
  int64_t violations = 0;
  std::string first;
  for (int64_t cases = 0; cases < 500; ++cases) {
    const auto& shape = shapes[static_cast<std::size_t>(rng() % shapes.size())];
    GroupSpec g = make_group(shape);
    const int64_t n = g.order();
    ElementSet a(g);
    int64_t want = static_cast<int64_t>(rng() % static_cast<std::uint64_t>(n));
    for (int64_t i = 0; i < want; ++i) {
      int64_t x = 1 + static_cast<int64_t>(rng() % static_cast<std::uint64_t>(n - 1));
      a.insert(x);
      a.insert(g.neg_index(x));
    }
    ElementSet u(g);
    for (int64_t i = 0; i < n; ++i)
      if (rng() % 2) u.insert(i);
    Rational bound = alon_chung_bound(a, u);
    int64_t edges2 = degree_sum(a, u);
    if (bound > Rational(edges2)) {
      ++violations;
      if (first.empty())
        first = "alon-chung bound " + bound.str() + " exceeds 2e = " + fmt_int(edges2) +
                " on " + format_group_spec(g);
    }
  }
  run.check(violations == 0, first);
  run.note("500 random (G,A,U): undirected bound never exceeded the enumerated edge count");

  violations = 0;
  first.clear();
  for (int64_t cases = 0; cases < 500; ++cases) {
    const auto& shape = shapes[static_cast<std::size_t>(rng() % shapes.size())];
    GroupSpec g = make_group(shape);
    const int64_t n = g.order();
    ElementSet a(g), u(g);
    for (int64_t i = 0; i < n; ++i) {
      if (rng() % 3 == 0) a.insert(i);
      if (rng() % 2) u.insert(i);
    }
    Rational bound = directed_alon_chung_bound(a, u);
    // arcs (x,y) with y - x in A
    int64_t arcs = 0;
    auto elems = u.indices();
    for (int64_t x : elems)
      for (int64_t y : elems)
        if (a.contains(g.add_index(y, g.neg_index(x)))) ++arcs;
    if (bound > Rational(arcs)) {
      ++violations;
      if (first.empty())
        first = "directed bound " + bound.str() + " exceeds e = " + fmt_int(arcs) + " on " +
                format_group_spec(g);
    }
  }
  run.check(violations == 0, first);
  run.note("500 random (G,A,U): directed bound never exceeded the enumerated arc count");

  GroupSpec z22 = make_group({2, 2});
  ElementSet triangle = ElementSet::from_indices(z22, {1, 2, 3});
  run.check(alon_chung_bound(triangle, triangle) == Rational(6) &&
                degree_sum(triangle, triangle) == 6,
            "Z_2^2 triangle case is not tight");
  run.note("Z_2^2 triangle: bound = 6 = 2e (tight)");
}

// -------------------------------------------------------------------- AC-10

void ac10(SuiteRun& run, const SuiteOptions& opt) {
  const std::vector<std::vector<int64_t>> shapes = {
      std::vector<int64_t>(12, 2), {4096}, std::vector<int64_t>(7, 3), {6, 6, 6, 6},
      {5, 7, 11}, {1000}, {729}, {64, 64}, {17, 17}, {2, 3, 5, 7}};
  std::mt19937_64 rng(opt.seed + 10);
  int64_t done = 0;
  bool all = true;
  for (int64_t i = 0; i < 1000; ++i) {
    const auto& shape = shapes[static_cast<std::size_t>(i) % shapes.size()];
    GroupSpec g = make_group(shape);
    const int64_t n = g.order();
    const int64_t cap = std::min<int64_t>(n, 512);
    int64_t size = static_cast<int64_t>(rng() % static_cast<std::uint64_t>(cap + 1));
    ElementSet s(g);
    while (s.size() < size)
      s.insert(static_cast<int64_t>(rng() % static_cast<std::uint64_t>(n)));
    int64_t naive = count_schur_naive(s);
    int64_t transform = count_schur_transform(s);
    if (naive != transform) {
      all = false;
      run.check(false, "transform " + fmt_int(transform) + " != naive " + fmt_int(naive) +
                           " on " + format_group_spec(g));
    }
    ++done;
  }
  run.check(all && done == 1000, "kernel comparison incomplete");
  run.note("1000 random sets on 10 group shapes (n up to 4096): transform = naive exactly");

  // incremental walk audit: random checkpoints against a fresh recount
  GroupSpec g = make_group({14});
  std::vector<int64_t> universe;
  for (int64_t i = 0; i < 14; ++i) universe.push_back(i);
  int64_t audited = 0;
  bool audit_ok = true;
  std::mt19937_64 audit_rng(opt.seed + 1010);
  sweep_combinations(g, universe, {}, 7, [&](const ElementSet& s, int64_t st) {
    if (audit_rng() % 3 != 0) return;
    ++audited;
    if (st != count_schur_naive(s)) audit_ok = false;
  });
  run.check(audit_ok && audited >= 1000,
            "incremental walk audit failed (" + fmt_int(audited) + " checkpoints)");
  run.note("incremental walk audit: " + fmt_int(audited) +
           " random checkpoints match a from-scratch recount");
}

// -------------------------------------------------------------------- AC-11

void ac11(SuiteRun& run, const SuiteOptions& opt) {
  std::vector<int64_t> ns = opt.n ? std::vector<int64_t>{*opt.n}
                                  : std::vector<int64_t>{1, 2, 3, 4};
  for (int64_t n : ns) {
    StabilityVerdict v = verify_conjecture_z2n_cyclic(n);
    if (n <= 3) {
      // the exhaustive oracle confirms prefix-minimality here; assert it
      run.check(v.pass, "conjectured ordering fails for n=" + fmt_int(n) + ": " + v.detail);
      run.note("n=" + fmt_int(n) + ": asserted, " + v.detail);
    } else {
      // conjecture status at n=4 is recorded, not asserted
      run.check(true, "");
      run.note("n=4: recorded verdict only (conjecture, not a theorem): " +
               std::string(v.pass ? "PASS, " : "FAIL, ") + v.detail);
    }
  }
}

using SuiteFn = void (*)(SuiteRun&, const SuiteOptions&);

struct SuiteSpec {
  const char* id;
  const char* alias;
  const char* title;
  SuiteFn fn;
};

const SuiteSpec kSuites[] = {
    {"AC-1", "zp-formula", "exhaustive f_Zp equals the prime-cyclic formula", ac1},
    {"AC-2", "zp-stability", "Z_p minimizers are exactly the dilated prefixes", ac2},
    {"AC-3", "z2n", "hypercube formula and subgroup-K stability", ac3},
    {"AC-4", "typeI", "type-I construction attains its bound; Z10 minima match", ac4},
    {"AC-5", "z3n", "Z_3^n bound, construction equality, sampled falsifier", ac5},
    {"AC-6", "z3zp", "Z_3 x Z_p construction stays below 21(a-p)^2", ac6},
    {"AC-7", "removal", "sum-free removal contract on random instances", ac7},
    {"AC-8", "pollard-kneser", "Pollard sweeps and Kneser identity", ac8},
    {"AC-9", "spectral", "mixing bounds never exceed enumerated edge counts", ac9},
    {"AC-10", "kernels", "transform vs naive counting and walk audit", ac10},
    {"AC-11", "z2n-cyclic", "conjectured Z_{2^n} ordering verdicts", ac11},
};

}  // namespace

const std::vector<std::string>& acceptance_suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.push_back(s.id);
    return v;
  }();
  return ids;
}

std::string canonical_suite_id(const std::string& id_or_alias) {
  for (const auto& s : kSuites)
    if (id_or_alias == s.id || id_or_alias == s.alias) return s.id;
  throw std::invalid_argument("unknown suite id: " + id_or_alias);
}

SuiteResult run_acceptance_suite(const std::string& id_or_alias, const SuiteOptions& opt) {
  const std::string id = canonical_suite_id(id_or_alias);
  for (const auto& s : kSuites) {
    if (id != s.id) continue;
    SuiteRun run;
    run.r.id = s.id;
    run.r.title = s.title;
    auto t0 = std::chrono::steady_clock::now();
    s.fn(run, opt);
    run.r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    run.r.pass = run.r.failures == 0;
    return run.r;
  }
  throw std::logic_error("suite table lookup failed");
}

}  // namespace schur
