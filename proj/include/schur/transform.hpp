#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "schur/group.hpp"

namespace schur {

// Exact cyclic convolution of two dense arrays over the group's index space:
// out[z] = sum over x+y=z of f[x]*g[y]. Schoolbook per-factor recursion,
// O(order^2) worst case. The caller is responsible for keeping products and
// sums inside 64 bits (indicator inputs always are).
std::vector<int64_t> convolve_exact(const GroupSpec& g, std::span<const int64_t> f,
                                    std::span<const int64_t> h);

// In-place Walsh-Hadamard transform of an array whose length is a power of
// two. Self-inverse up to a factor of the length.
void fwht_inplace(std::span<int64_t> data);
void fwht_inplace(std::span<__int128> data);

// Unnormalized character transform: out[t] = sum_x f[x] * exp(sign*2*pi*i*
// sum_j t_j c_j / m_j), computed axis by axis. Radix-2 lines use an FFT,
// other lengths a schoolbook DFT.
std::vector<std::complex<double>> group_dft(const GroupSpec& g,
                                            std::span<const std::complex<double>> f, int sign);

enum class ConvPath { Auto, Schoolbook, Walsh, Float };

// r_A = 1_A * 1_A, exact. Auto picks the Walsh path for Z_2^k, a verified
// floating transform for other large groups, and schoolbook otherwise. The
// floating path is accepted only when every entry rounds to an integer within
// 0.25; otherwise it falls back to the exact schoolbook route.
std::vector<int64_t> indicator_self_convolution(const ElementSet& a, ConvPath path = ConvPath::Auto);

}  // namespace schur
