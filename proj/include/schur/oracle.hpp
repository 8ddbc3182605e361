#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schur/constructions.hpp"
#include "schur/group.hpp"
#include "schur/rational.hpp"

namespace schur {

// Visits every way of extending `base` by `pick` elements of `universe`
// (disjoint from base). Consecutive subsets differ by a single element swap
// (revolving-door order) and the running Schur-triple count is maintained
// with O(|set|) delta updates. The visitor sees the full set and its count.
using SweepVisitor = std::function<void(const ElementSet&, int64_t)>;
void sweep_combinations(const GroupSpec& g, const std::vector<int64_t>& universe,
                        const std::vector<int64_t>& base, int64_t pick, const SweepVisitor& visit);

struct OracleOptions {
  bool enumerate_all = false;
  int workers = 1;
  int64_t minimizer_cap = 100000;
  // Optional symmetry reduction: index maps of automorphisms; only canonical
  // orbit representatives are evaluated and minimizer orbits are re-expanded
  // before reporting. Leave empty (the default) for verification runs.
  std::vector<std::vector<int64_t>> symmetry_maps;
  int64_t exhaustive_cap = 22;  // largest group order swept exhaustively
};

struct MinimizationResult {
  GroupSpec group;
  int64_t a = 0;
  int64_t f_value = 0;
  std::vector<ElementSet> minimizers;  // all when enumerate_all (capped), else one witness
  int64_t minimizer_count = 0;         // exact even when the list is capped
  int64_t subsets_examined = 0;
  double wall_seconds = 0.0;
};

// Exact f_G(a) by exhaustive sweep. Requires |G| <= options.exhaustive_cap.
MinimizationResult brute_force_min(const GroupSpec& g, int64_t a, const OracleOptions& options = {});

struct FTable {
  GroupSpec group;
  std::vector<int64_t> f;  // f[a] for a = 0..|G|
  int64_t a_g = 0;         // largest a with f(a) = 0
};

FTable f_table(const GroupSpec& g, const OracleOptions& options = {});

// Samples `trials` uniform a-subsets; returns the first whose triple count is
// strictly below `bound`, if any. Deterministic under seed.
std::optional<ElementSet> sampled_lower_bound_falsifier(const GroupSpec& g, int64_t a,
                                                        const Rational& bound, int64_t trials,
                                                        std::uint64_t seed);

struct StabilityVerdict {
  std::string theorem;
  bool applicable = true;
  bool pass = false;
  std::optional<ElementSet> counterexample;
  std::string detail;
};

// Theorem: in Z_p the minimizers with a positive minimum are exactly the
// dilates xi * {x_1..x_a} of the middle-ordering prefix. p <= 19.
StabilityVerdict verify_stability_zp(int64_t p, int64_t a);

// Theorem: in Z_2^n every minimizer is (G \ K) u S with K a subgroup of order
// 2^k and S a sum-free subset of K, and every such set is a minimizer. n <= 4.
StabilityVerdict verify_stability_z2n(int64_t n, int64_t a);

// Conjecture: prefixes of the recursive Z_{2^n} ordering minimise ST for
// every cardinality. Checked exhaustively; n <= 4.
StabilityVerdict verify_conjecture_z2n_cyclic(int64_t n);

// Index maps of x -> u*x for every unit u modulo the group exponent. These
// are automorphisms of any finite abelian group; for Z_p they are exactly the
// nonzero dilations.
std::vector<std::vector<int64_t>> unit_scaling_index_maps(const GroupSpec& g);

// Index maps of all coordinate permutations; requires equal factor orders.
std::vector<std::vector<int64_t>> coordinate_permutation_index_maps(const GroupSpec& g);

ElementSet apply_index_map(const ElementSet& s, const std::vector<int64_t>& map);

// All subgroups of the given order, as element-index sets. Brute enumeration,
// meant for hypercube-sized groups.
std::vector<ElementSet> subgroups_of_order(const GroupSpec& g, int64_t order);

}  // namespace schur
