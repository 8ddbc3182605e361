#include "schur/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "schur/transform.hpp"

namespace schur {

namespace {

constexpr double kRealTolerance = 1e-9;
constexpr double kSnapTolerance = 1e-6;

bool all_factors_equal(const GroupSpec& g, int64_t q) {
  return std::all_of(g.factors().begin(), g.factors().end(),
                     [q](int64_t m) { return m == q; });
}

// Snap a float to an exact multiple of 1/2 (tolerance kSnapTolerance).
Rational snap_half_integer(double v, const char* what) {
  double doubled = 2.0 * v;
  double r = std::round(doubled);
  if (std::abs(doubled - r) > 2.0 * kSnapTolerance * std::max(1.0, std::abs(doubled)))
    throw std::logic_error(std::string(what) + ": eigenvalue does not snap to a half-integer");
  return Rational(static_cast<int64_t>(r), 2);
}

// Largest dyadic rational (denominator 2^20) certainly below v. Keeps bounds
// valid on groups whose spectrum is irrational.
Rational dyadic_floor(double v) {
  constexpr int64_t kScale = int64_t{1} << 20;
  double scaled = std::floor(v * static_cast<double>(kScale)) - 1.0;
  return Rational(static_cast<int64_t>(scaled), kScale);
}

Rational exact_lambda(const ElementSet& a, bool directed) {
  const GroupSpec& g = a.group();
  if (all_factors_equal(g, 2)) return Rational(lambda_min_z2n(a));
  SpectrumReport sp = cayley_spectrum(a, directed);
  double v = directed ? sp.r_min : *sp.lambda_min;
  if (all_factors_equal(g, 3)) return snap_half_integer(v, "alon_chung");
  return dyadic_floor(v);
}

Rational mixing_bound(int64_t degree, int64_t n, const Rational& lambda, int64_t u) {
  Rational nn(n);
  return Rational(degree, 1) / nn * Rational(u * u) + lambda / nn * Rational(u * (n - u));
}

}  // namespace

std::complex<double> CharacterDescriptor::evaluate(const GroupSpec& g,
                                                   int64_t element_index) const {
  auto coords = g.coords_of(element_index);
  double phase = 0.0;
  for (std::size_t j = 0; j < coords.size(); ++j)
    phase += static_cast<double>(frequencies[j]) * static_cast<double>(coords[j]) /
             static_cast<double>(g.factors()[j]);
  double ang = 2.0 * std::numbers::pi * phase;
  return {std::cos(ang), std::sin(ang)};
}

CharacterDescriptor character_at(const GroupSpec& g, int64_t character_index) {
  return CharacterDescriptor{g.coords_of(character_index)};
}

SpectrumReport cayley_spectrum(const ElementSet& a, bool directed) {
  const GroupSpec& g = a.group();
  if (!directed) {
    if (a.contains(0))
      throw std::invalid_argument("cayley_spectrum: undirected mode requires 0 not in A");
    ElementSet neg(g);
    a.for_each([&](int64_t x) { neg.insert(g.neg_index(x)); });
    if (neg != a)
      throw std::invalid_argument("cayley_spectrum: undirected mode requires A = -A");
  }
  const int64_t n = g.order();
  std::vector<std::complex<double>> ind(static_cast<std::size_t>(n), 0.0);
  a.for_each([&](int64_t x) { ind[static_cast<std::size_t>(x)] = 1.0; });
  SpectrumReport rep;
  rep.eigenvalues = group_dft(g, ind, +1);
  double rmin = rep.eigenvalues.empty() ? 0.0 : rep.eigenvalues[0].real();
  for (const auto& ev : rep.eigenvalues) rmin = std::min(rmin, ev.real());
  rep.r_min = rmin;
  if (!directed) {
    double lmin = rep.eigenvalues[0].real();
    for (const auto& ev : rep.eigenvalues) {
      if (std::abs(ev.imag()) > kRealTolerance)
        throw std::logic_error("cayley_spectrum: non-real eigenvalue in undirected mode");
      lmin = std::min(lmin, ev.real());
    }
    rep.lambda_min = lmin;
  }
  return rep;
}

int64_t lambda_min_z2n(const ElementSet& a) {
  const GroupSpec& g = a.group();
  if (!all_factors_equal(g, 2))
    throw std::invalid_argument("lambda_min_z2n: ambient group must be Z_2^n");
  const int64_t n = g.order();
  std::vector<int64_t> buf(static_cast<std::size_t>(n), 0);
  a.for_each([&](int64_t x) { buf[static_cast<std::size_t>(x)] = 1; });
  fwht_inplace(std::span<int64_t>(buf));
  // buf[t] = |A n H_t| - |A \ H_t| for the index-2 subgroup attached to t != 0.
  int64_t best = 0;
  bool first = true;
  for (int64_t t = 1; t < n; ++t) {
    if (first || buf[static_cast<std::size_t>(t)] < best) best = buf[static_cast<std::size_t>(t)];
    first = false;
  }
  return first ? 0 : best;
}

Rational r_min_z3n(const ElementSet& a) {
  const GroupSpec& g = a.group();
  if (!all_factors_equal(g, 3))
    throw std::invalid_argument("r_min_z3n: ambient group must be Z_3^n");
  const int64_t k = g.rank();
  auto elems = a.indices();
  std::vector<std::vector<int64_t>> coords;
  coords.reserve(elems.size());
  for (int64_t e : elems) coords.push_back(g.coords_of(e));

  std::optional<Rational> best;
  // Canonical frequency vectors: first nonzero entry is 1. Each names one
  // index-3 subgroup (its kernel).
  std::vector<int64_t> t(static_cast<std::size_t>(k), 0);
  for (int64_t lead = 0; lead < k; ++lead) {
    std::fill(t.begin(), t.end(), 0);
    t[static_cast<std::size_t>(lead)] = 1;
    int64_t tail = k - lead - 1;
    int64_t combos = 1;
    for (int64_t i = 0; i < tail; ++i) combos *= 3;
    for (int64_t mask = 0; mask < combos; ++mask) {
      int64_t m = mask;
      for (int64_t i = k - 1; i > lead; --i) {
        t[static_cast<std::size_t>(i)] = m % 3;
        m /= 3;
      }
      int64_t in_h = 0;
      for (const auto& c : coords) {
        int64_t dot = 0;
        for (int64_t i = lead; i < k; ++i) dot += t[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
        if (dot % 3 == 0) ++in_h;
      }
      Rational value = Rational(in_h) - Rational(static_cast<int64_t>(elems.size()) - in_h, 2);
      if (!best || value < *best) best = value;
    }
  }
  return best ? *best : Rational(0);
}

Rational st_spectral_lower_bound_z3n(const ElementSet& a) {
  const GroupSpec& g = a.group();
  if (!all_factors_equal(g, 3))
    throw std::invalid_argument("st_spectral_lower_bound_z3n: ambient group must be Z_3^n");
  const Rational n(g.order());
  const Rational sz(a.size());
  Rational r = r_min_z3n(a);
  return sz * sz * sz / n + r * sz * (Rational(1) - sz / n);
}

Rational alon_chung_bound(const ElementSet& a, const ElementSet& u) {
  if (a.group() != u.group())
    throw std::invalid_argument("alon_chung_bound: sets live in different groups");
  const GroupSpec& g = a.group();
  if (a.contains(0)) throw std::invalid_argument("alon_chung_bound: requires 0 not in A");
  {
    ElementSet neg(g);
    a.for_each([&](int64_t x) { neg.insert(g.neg_index(x)); });
    if (neg != a) throw std::invalid_argument("alon_chung_bound: requires A = -A");
  }
  if (u.empty()) return Rational(0);
  Rational lambda = a.empty() ? Rational(0) : exact_lambda(a, /*directed=*/false);
  return mixing_bound(a.size(), g.order(), lambda, u.size());
}

Rational directed_alon_chung_bound(const ElementSet& a, const ElementSet& u) {
  if (a.group() != u.group())
    throw std::invalid_argument("directed_alon_chung_bound: sets live in different groups");
  if (u.empty()) return Rational(0);
  Rational r = a.empty() ? Rational(0) : exact_lambda(a, /*directed=*/true);
  return mixing_bound(a.size(), a.group().order(), r, u.size());
}

}  // namespace schur
