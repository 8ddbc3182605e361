#include "schur/transform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schur {

namespace {

void conv_rec(std::span<const int64_t> factors, int64_t len, const int64_t* f, const int64_t* h,
              int64_t* out) {
  if (factors.empty()) {
    out[0] += f[0] * h[0];
    return;
  }
  const int64_t m = factors[0];
  const int64_t sub = len / m;
  auto tail = factors.subspan(1);
  for (int64_t a = 0; a < m; ++a)
    for (int64_t b = 0; b < m; ++b) {
      int64_t c = a + b;
      if (c >= m) c -= m;
      conv_rec(tail, sub, f + a * sub, h + b * sub, out + c * sub);
    }
}

template <typename Int>
void fwht_impl(std::span<Int> data) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fwht: length must be a power of two");
  for (std::size_t half = 1; half < n; half <<= 1)
    for (std::size_t block = 0; block < n; block += 2 * half)
      for (std::size_t i = block; i < block + half; ++i) {
        Int u = data[i], v = data[i + half];
        data[i] = u + v;
        data[i + half] = u - v;
      }
}

using cd = std::complex<double>;

void fft_pow2(std::vector<cd>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    cd wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cd w(1.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        cd u = a[i + j], v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

void dft_line(std::vector<cd>& line, std::vector<cd>& scratch, const std::vector<cd>& roots,
              int sign) {
  const std::size_t m = line.size();
  if ((m & (m - 1)) == 0) {
    fft_pow2(line, sign);
    return;
  }
  scratch.assign(m, cd(0.0));
  for (std::size_t t = 0; t < m; ++t) {
    cd acc(0.0);
    for (std::size_t x = 0; x < m; ++x) acc += line[x] * roots[t * x % m];
    scratch[t] = acc;
  }
  line.swap(scratch);
}

}  // namespace

std::vector<int64_t> convolve_exact(const GroupSpec& g, std::span<const int64_t> f,
                                    std::span<const int64_t> h) {
  const int64_t n = g.order();
  if (static_cast<int64_t>(f.size()) != n || static_cast<int64_t>(h.size()) != n)
    throw std::invalid_argument("convolve_exact: array length must equal the group order");
  std::vector<int64_t> out(static_cast<std::size_t>(n), 0);
  conv_rec(std::span<const int64_t>(g.factors()), n, f.data(), h.data(), out.data());
  return out;
}

void fwht_inplace(std::span<int64_t> data) { fwht_impl(data); }
void fwht_inplace(std::span<__int128> data) { fwht_impl(data); }

std::vector<cd> group_dft(const GroupSpec& g, std::span<const cd> f, int sign) {
  const int64_t n = g.order();
  if (static_cast<int64_t>(f.size()) != n)
    throw std::invalid_argument("group_dft: array length must equal the group order");
  if (sign != 1 && sign != -1) throw std::invalid_argument("group_dft: sign must be +-1");
  std::vector<cd> data(f.begin(), f.end());
  std::vector<cd> line, scratch;
  const auto& factors = g.factors();
  int64_t stride = 1;
  for (std::size_t ax = factors.size(); ax-- > 0;) {
    const int64_t m = factors[ax];
    std::vector<cd> roots(static_cast<std::size_t>(m));
    for (int64_t r = 0; r < m; ++r) {
      double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
      roots[static_cast<std::size_t>(r)] = cd(std::cos(ang), std::sin(ang));
    }
    const int64_t block = stride * m;
    line.resize(static_cast<std::size_t>(m));
    for (int64_t base = 0; base < n; base += block)
      for (int64_t off = 0; off < stride; ++off) {
        for (int64_t c = 0; c < m; ++c)
          line[static_cast<std::size_t>(c)] = data[static_cast<std::size_t>(base + off + c * stride)];
        dft_line(line, scratch, roots, sign);
        for (int64_t c = 0; c < m; ++c)
          data[static_cast<std::size_t>(base + off + c * stride)] = line[static_cast<std::size_t>(c)];
      }
    stride = block;
  }
  return data;
}

namespace {

std::vector<int64_t> self_conv_walsh(const ElementSet& a) {
  const int64_t n = a.group_order();
  // Intermediate butterfly sums can reach n * |A|^2; widen when that nears 63 bits.
  const int bits = std::bit_width(static_cast<std::uint64_t>(n));
  const bool wide = 3 * bits > 60;
  std::vector<int64_t> out(static_cast<std::size_t>(n), 0);
  if (!wide) {
    std::vector<int64_t> buf(static_cast<std::size_t>(n), 0);
    a.for_each([&](int64_t i) { buf[static_cast<std::size_t>(i)] = 1; });
    fwht_inplace(std::span<int64_t>(buf));
    for (auto& v : buf) v *= v;
    fwht_inplace(std::span<int64_t>(buf));
    for (int64_t i = 0; i < n; ++i) {
      if (buf[static_cast<std::size_t>(i)] % n != 0)
        throw std::logic_error("walsh self-convolution: inexact division");
      out[static_cast<std::size_t>(i)] = buf[static_cast<std::size_t>(i)] / n;
    }
  } else {
    std::vector<__int128> buf(static_cast<std::size_t>(n), 0);
    a.for_each([&](int64_t i) { buf[static_cast<std::size_t>(i)] = 1; });
    fwht_inplace(std::span<__int128>(buf));
    for (auto& v : buf) v *= v;
    fwht_inplace(std::span<__int128>(buf));
    for (int64_t i = 0; i < n; ++i) {
      if (buf[static_cast<std::size_t>(i)] % n != 0)
        throw std::logic_error("walsh self-convolution: inexact division");
      out[static_cast<std::size_t>(i)] = static_cast<int64_t>(buf[static_cast<std::size_t>(i)] / n);
    }
  }
  return out;
}

std::vector<int64_t> self_conv_schoolbook(const ElementSet& a) {
  const int64_t n = a.group_order();
  std::vector<int64_t> ind(static_cast<std::size_t>(n), 0);
  a.for_each([&](int64_t i) { ind[static_cast<std::size_t>(i)] = 1; });
  return convolve_exact(a.group(), ind, ind);
}

bool try_self_conv_float(const ElementSet& a, std::vector<int64_t>& out) {
  const GroupSpec& g = a.group();
  const int64_t n = g.order();
  std::vector<cd> buf(static_cast<std::size_t>(n), cd(0.0));
  a.for_each([&](int64_t i) { buf[static_cast<std::size_t>(i)] = cd(1.0); });
  auto fwd = group_dft(g, buf, -1);
  for (auto& v : fwd) v *= v;
  auto back = group_dft(g, fwd, 1);
  out.assign(static_cast<std::size_t>(n), 0);
  const double scale = 1.0 / static_cast<double>(n);
  for (int64_t i = 0; i < n; ++i) {
    double v = back[static_cast<std::size_t>(i)].real() * scale;
    double r = std::round(v);
    if (std::abs(v - r) > 0.25) return false;
    out[static_cast<std::size_t>(i)] = static_cast<int64_t>(r);
  }
  return true;
}

constexpr int64_t kFloatPathMinOrder = 1024;

}  // namespace

std::vector<int64_t> indicator_self_convolution(const ElementSet& a, ConvPath path) {
  const GroupSpec& g = a.group();
  const bool all_two = std::all_of(g.factors().begin(), g.factors().end(),
                                   [](int64_t m) { return m == 2; });
  switch (path) {
    case ConvPath::Schoolbook:
      return self_conv_schoolbook(a);
    case ConvPath::Walsh:
      if (!all_two) throw std::invalid_argument("walsh path requires a Z_2^k group");
      return self_conv_walsh(a);
    case ConvPath::Float: {
      std::vector<int64_t> out;
      if (!try_self_conv_float(a, out)) return self_conv_schoolbook(a);
      return out;
    }
    case ConvPath::Auto:
      break;
  }
  if (all_two) return self_conv_walsh(a);
  if (g.order() >= kFloatPathMinOrder) {
    std::vector<int64_t> out;
    if (try_self_conv_float(a, out)) return out;
  }
  return self_conv_schoolbook(a);
}

}  // namespace schur
