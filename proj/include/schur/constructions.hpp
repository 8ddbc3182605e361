#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schur/group.hpp"
#include "schur/rational.hpp"

namespace schur {

struct BoundReport {
  enum class Theorem { Zp, TypeI, Z2n, Z3n, Z3ZpUpper, Spectral };

  Theorem id = Theorem::Zp;
  std::optional<int64_t> p, t, n, a, k;
  Rational value;
  bool applicable = true;
  std::string reason;  // set when applicable is false

  static std::string theorem_name(Theorem t);
};

// A full ordering x_1, ..., x_modulus of Z_modulus.
struct OrderingTable {
  int64_t modulus = 0;
  std::vector<int64_t> elements;
};

// x_{2i} = (p-1)/2 + i, x_{2i+1} = (p-1)/2 - i: the interleaved ordering whose
// prefixes minimise the Schur-triple count in Z_p. Odd primes only.
OrderingTable zp_middle_ordering(int64_t p);

// f_{Z_p}(a): 0 when 3a <= p+1, else floor((3a-p)/2) * ceil((3a-p)/2).
BoundReport zp_min_formula(int64_t p, int64_t a);

// Preimage construction for groups of type I(p), p = 3k+2: the full fibers
// phi^{-1}({k+1,...,2k+1}) of the lexicographically-first surjection
// phi: G -> Z_p, plus a deterministic t-element sum-free subset of the fiber
// phi^{-1}({k}). seed != 0 re-randomizes the greedy scan order.
ElementSet typeI_construction(const GroupSpec& g, int64_t p, int64_t t, std::uint64_t seed = 0);

inline const Rational kTypeIDefaultDelta{1, 82};

// 3t|G|/p + [p != 2] t^2. Flagged not-applicable (value still returned) when
// G is not of type I(p) or t exceeds delta*|G|/p.
BoundReport typeI_bound(const GroupSpec& g, int64_t p, int64_t t,
                        Rational delta = kTypeIDefaultDelta);

// The a largest binary values {2^n-1, ..., 2^n-a} as vectors of Z_2^n.
ElementSet z2n_extremal_set(int64_t n, int64_t a);

// (3a + 2^k - 2^{n+1})(2^n - 2^k) with k the unique integer satisfying
// 2^n - 2^k <= a < 2^n - 2^{k-1}; reported alongside k.
BoundReport z2n_min_formula(int64_t n, int64_t a);

inline const Rational kZ3nDefaultDelta{1, 1000};

// The coset {x_1 = 1} of Z_3^n plus a deterministic t-element sum-free subset
// of the coset {x_1 = 2}.
ElementSet z3n_construction(int64_t n, int64_t t, std::uint64_t seed = 0);

// 3^{n-1} t + t^2. Flagged not-theorem-covered when t > delta*3^{n-1}.
BoundReport z3n_bound(int64_t n, int64_t t, Rational delta = kZ3nDefaultDelta);

// An a-element subset of Z_3 x Z_p with ST <= 21 (a-p)^2, built as
// Z_3 x {x_1, ..., x_{b/3}} for b = 3*ceil(a/3) and trimmed greedily by
// largest per-element triple count. Requires p+1 <= a <= 3p.
ElementSet z3zp_construction(int64_t p, int64_t a);

struct RemovalReport {
  ElementSet result;          // B = A' \ (A' - A')
  int64_t c_size = 0;         // |C|, the heavy elements removed first
  int64_t overlap = 0;        // |A' n (A' - A')|
  bool preconditions_met = false;
  bool result_sum_free = false;
  bool removal_within_eps = false;  // |A \ B| <= eps * |G|
};

// C = {x in A : |(x-A) n A| >= eps n}, A' = A \ C, B = A' \ (A' - A').
// Preconditions |A| >= (1/3 + eps)|G| and ST(A) <= eps^2 |G|^2 / 2 are
// reported, not enforced; when they hold, B is sum-free with |A\B| <= eps n.
RemovalReport sumfree_removal(const ElementSet& a, const Rational& eps);

// Deterministic t-element sum-free subset of pool found by backtracking over
// canonical index order (lexicographically-first result). seed != 0 shuffles
// the scan order. Throws when no such subset exists (exhaustively confirmed
// for |pool| <= 24) or when the node budget runs out on larger pools.
ElementSet greedy_sum_free_subset(const ElementSet& pool, int64_t t, std::uint64_t seed = 0);

// The recursive ordering of Z_{2^n}: x_1^0 = 0, x_i^{n+1} = 2 x_i^n + 1,
// x_{2^n + i}^{n+1} = 2 x_i^n.
OrderingTable conjectured_z2n_cyclic_ordering(int64_t n);

}  // namespace schur
