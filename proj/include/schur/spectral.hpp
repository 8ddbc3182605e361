#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "schur/group.hpp"
#include "schur/rational.hpp"

namespace schur {

// Character chi_t(x) = exp(2*pi*i * sum_j t_j c_j / m_j), addressed by the
// canonical index of its frequency tuple t.
struct CharacterDescriptor {
  std::vector<int64_t> frequencies;

  std::complex<double> evaluate(const GroupSpec& g, int64_t element_index) const;
};

CharacterDescriptor character_at(const GroupSpec& g, int64_t character_index);

// Eigenvalues of the (directed) Cayley graph of A: one character sum
// lambda_chi = sum_{a in A} chi(a) per character, indexed like the group.
struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  std::optional<double> lambda_min;  // undirected mode: smallest (real) eigenvalue
  double r_min = 0.0;                // smallest real part
};

// Undirected mode requires A = -A and 0 not in A, and insists every character
// sum is real to within 1e-9.
SpectrumReport cayley_spectrum(const ElementSet& a, bool directed);

// min{|A n H| - |A n H^c| : H < Z_2^n, [G:H] = 2}, the smallest nontrivial
// Cayley eigenvalue over the hypercube. Exact integers via the Walsh transform.
int64_t lambda_min_z2n(const ElementSet& a);

// min{|A n H| - |A \ H|/2 : H < Z_3^n, [G:H] = 3} as an exact half-integer.
Rational r_min_z3n(const ElementSet& a);

// 3^{-n}|A|^3 + r_A |A| (1 - 3^{-n}|A|) with r_A = r_min_z3n(A); a lower bound
// on ST(A) for A in Z_3^n.
Rational st_spectral_lower_bound_z3n(const ElementSet& a);

// (D/N)|U|^2 + (lambda/N)|U|(N-|U|) with D = |A|, N = |G|; lower bound on
// twice the edge count of the subgraph of the Cayley graph induced on U.
// Requires A = -A and 0 not in A. lambda is exact for Z_2^k and Z_3^k; for
// other groups a certified dyadic lower bound on the float spectrum is used,
// so the returned rational is always a valid bound.
Rational alon_chung_bound(const ElementSet& a, const ElementSet& u);

// Directed counterpart bounding e(G_A[U]) from below; no symmetry required.
Rational directed_alon_chung_bound(const ElementSet& a, const ElementSet& u);

}  // namespace schur
