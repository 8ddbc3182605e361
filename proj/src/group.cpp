#include "schur/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schur {

bool is_prime(int64_t v) {
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0) return false;
  for (int64_t d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

GroupSpec GroupSpec::make(std::vector<int64_t> orders, int64_t cap) {
  if (orders.empty()) throw std::invalid_argument("group: at least one cyclic factor required");
  GroupSpec g;
  g.order_ = 1;
  for (int64_t m : orders) {
    if (m < 2) throw std::invalid_argument("group: every factor order must be >= 2");
    if (g.order_ > cap / m)
      throw std::invalid_argument("group: order exceeds dense cap " + std::to_string(cap));
    g.order_ *= m;
  }
  g.factors_ = std::move(orders);
  g.strides_.resize(g.factors_.size());
  int64_t s = 1;
  for (std::size_t i = g.factors_.size(); i-- > 0;) {
    g.strides_[i] = s;
    s *= g.factors_[i];
  }
  return g;
}

int64_t GroupSpec::exponent() const {
  int64_t e = 1;
  for (int64_t m : factors_) e = std::lcm(e, m);  // lcm <= order, no overflow
  return e;
}

int64_t GroupSpec::index_of(std::span<const int64_t> coords) const {
  if (static_cast<int64_t>(coords.size()) != rank())
    throw std::invalid_argument("element/group mismatch: wrong coordinate count");
  int64_t idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= factors_[i])
      throw std::invalid_argument("element/group mismatch: coordinate out of range");
    idx += coords[i] * strides_[i];
  }
  return idx;
}

std::vector<int64_t> GroupSpec::coords_of(int64_t index) const {
  if (index < 0 || index >= order_)
    throw std::invalid_argument("element index out of range");
  std::vector<int64_t> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    c[i] = (index / strides_[i]) % factors_[i];
  return c;
}

int64_t GroupSpec::add_index(int64_t i, int64_t j) const {
  int64_t out = 0;
  for (std::size_t d = 0; d < factors_.size(); ++d) {
    int64_t m = factors_[d], s = strides_[d];
    int64_t c = (i / s) % m + (j / s) % m;
    if (c >= m) c -= m;
    out += c * s;
  }
  return out;
}

int64_t GroupSpec::neg_index(int64_t i) const {
  int64_t out = 0;
  for (std::size_t d = 0; d < factors_.size(); ++d) {
    int64_t m = factors_[d], s = strides_[d];
    int64_t c = (i / s) % m;
    if (c != 0) c = m - c;
    out += c * s;
  }
  return out;
}

GroupSpec make_group(std::vector<int64_t> orders, int64_t cap) {
  return GroupSpec::make(std::move(orders), cap);
}

GroupElement element_at(const GroupSpec& g, int64_t index) {
  return GroupElement{g.coords_of(index), index};
}

GroupElement element_of(const GroupSpec& g, std::vector<int64_t> coords) {
  int64_t idx = g.index_of(coords);
  return GroupElement{std::move(coords), idx};
}

GroupElement add(const GroupSpec& g, const GroupElement& x, const GroupElement& y) {
  if (g.index_of(x.coords) != x.index || g.index_of(y.coords) != y.index)
    throw std::invalid_argument("element/group mismatch");
  return element_at(g, g.add_index(x.index, y.index));
}

GroupElement neg(const GroupSpec& g, const GroupElement& x) {
  if (g.index_of(x.coords) != x.index)
    throw std::invalid_argument("element/group mismatch");
  return element_at(g, g.neg_index(x.index));
}

ElementSet::ElementSet(GroupSpec group)
    : group_(std::move(group)),
      bits_(static_cast<std::size_t>((group_.order() + 63) / 64), 0) {}

ElementSet ElementSet::from_indices(GroupSpec group, std::span<const int64_t> indices) {
  ElementSet s(std::move(group));
  for (int64_t i : indices) s.insert(i);
  return s;
}

ElementSet ElementSet::from_indices(GroupSpec group, std::initializer_list<int64_t> indices) {
  return from_indices(std::move(group), std::span<const int64_t>(indices.begin(), indices.size()));
}

void ElementSet::check_index(int64_t index) const {
  if (index < 0 || index >= group_.order())
    throw std::invalid_argument("set element index out of range");
}

void ElementSet::insert(int64_t index) {
  check_index(index);
  std::uint64_t& w = bits_[static_cast<std::size_t>(index >> 6)];
  std::uint64_t m = std::uint64_t{1} << (index & 63);
  if (!(w & m)) {
    w |= m;
    ++card_;
  }
}

void ElementSet::erase(int64_t index) {
  check_index(index);
  std::uint64_t& w = bits_[static_cast<std::size_t>(index >> 6)];
  std::uint64_t m = std::uint64_t{1} << (index & 63);
  if (w & m) {
    w &= ~m;
    --card_;
  }
}

void ElementSet::clear() {
  std::fill(bits_.begin(), bits_.end(), 0);
  card_ = 0;
}

std::vector<int64_t> ElementSet::indices() const {
  std::vector<int64_t> out;
  out.reserve(static_cast<std::size_t>(card_));
  for_each([&](int64_t i) { out.push_back(i); });
  return out;
}

ElementSet ElementSet::complement() const {
  ElementSet out(group_);
  for (int64_t i = 0; i < group_.order(); ++i)
    if (!contains(i)) out.insert(i);
  return out;
}

bool is_valid_subgroup(const SubgroupHandle& h) {
  const GroupSpec& g = h.carrier.group();
  if (!h.carrier.contains(0)) return false;
  if (h.carrier.size() * h.index_in_g != g.order()) return false;
  auto elems = h.carrier.indices();
  for (int64_t x : elems) {
    if (!h.carrier.contains(g.neg_index(x))) return false;
    for (int64_t y : elems)
      if (!h.carrier.contains(g.add_index(x, y))) return false;
  }
  return true;
}

int64_t CyclicHom::apply_coords(std::span<const int64_t> coords) const {
  int64_t acc = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    acc = (acc + coords[i] % modulus * gen_images[i]) % modulus;
  return acc;
}

int64_t CyclicHom::apply_index(const GroupSpec& g, int64_t index) const {
  auto c = g.coords_of(index);
  return apply_coords(c);
}

ElementSet CyclicHom::kernel(const GroupSpec& g) const {
  ElementSet k(g);
  for (int64_t i = 0; i < g.order(); ++i)
    if (apply_index(g, i) == 0) k.insert(i);
  return k;
}

std::vector<SubgroupHandle> subgroups_of_prime_index(const GroupSpec& g, int64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("subgroups_of_prime_index: q must be prime");
  const int64_t k = g.rank();
  std::vector<int64_t> divisible;  // positions whose factor order q divides
  for (int64_t i = 0; i < k; ++i)
    if (g.factors()[static_cast<std::size_t>(i)] % q == 0) divisible.push_back(i);

  std::vector<SubgroupHandle> out;
  // Canonical homomorphisms: first nonzero generator image is 1 and sits at a
  // q-divisible position; later q-divisible positions range over [0, q).
  std::vector<int64_t> images(static_cast<std::size_t>(k), 0);
  for (std::size_t lead = 0; lead < divisible.size(); ++lead) {
    std::fill(images.begin(), images.end(), 0);
    images[static_cast<std::size_t>(divisible[lead])] = 1;
    std::vector<int64_t> tail(divisible.begin() + static_cast<std::ptrdiff_t>(lead) + 1,
                              divisible.end());
    std::vector<int64_t> digits(tail.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < tail.size(); ++i)
        images[static_cast<std::size_t>(tail[i])] = digits[i];
      CyclicHom hom{q, images};
      out.push_back(SubgroupHandle{hom.kernel(g), q});
      std::size_t pos = tail.size();
      while (pos > 0 && digits[pos - 1] == q - 1) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
  return out;
}

std::vector<CyclicHom> surjections_to_cyclic(const GroupSpec& g, int64_t m) {
  if (m < 1) throw std::invalid_argument("surjections_to_cyclic: m must be positive");
  if (g.exponent() % m != 0)
    throw std::invalid_argument("surjections_to_cyclic: m does not divide the group exponent");
  const int64_t k = g.rank();
  // The image of generator i must be killed by the factor order: it has to be
  // a multiple of m / gcd(m_i, m).
  std::vector<int64_t> step(static_cast<std::size_t>(k));
  std::vector<int64_t> count(static_cast<std::size_t>(k));
  for (int64_t i = 0; i < k; ++i) {
    int64_t gi = std::gcd(g.factors()[static_cast<std::size_t>(i)], m);
    step[static_cast<std::size_t>(i)] = m / gi;
    count[static_cast<std::size_t>(i)] = gi;
  }
  std::vector<CyclicHom> out;
  std::vector<int64_t> digit(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<int64_t> images(static_cast<std::size_t>(k));
    int64_t d = m;
    for (int64_t i = 0; i < k; ++i) {
      images[static_cast<std::size_t>(i)] = digit[static_cast<std::size_t>(i)] * step[static_cast<std::size_t>(i)];
      d = std::gcd(d, images[static_cast<std::size_t>(i)]);
    }
    if (d == 1 || m == 1) out.push_back(CyclicHom{m, std::move(images)});
    std::size_t pos = static_cast<std::size_t>(k);
    while (pos > 0 && digit[pos - 1] == count[pos - 1] - 1) digit[--pos] = 0;
    if (pos == 0) break;
    ++digit[pos - 1];
  }
  if (out.empty())
    throw std::logic_error("surjections_to_cyclic: no surjection found although m | exp(G)");
  return out;
}

std::string GroupTypeTag::str() const {
  switch (kind) {
    case Kind::TypeI:
      return "I(" + std::to_string(param) + ")";
    case Kind::TypeII:
      return "II";
    case Kind::TypeIII:
      return "III(" + std::to_string(param) + ")";
  }
  return "?";
}

GroupTypeTag classify_group_type(const GroupSpec& g) {
  int64_t n = g.order();
  int64_t smallest_2mod3 = 0;
  bool divisible_by_3 = false;
  int64_t rest = n;
  for (int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    if (p == 3) divisible_by_3 = true;
    if (p % 3 == 2 && (smallest_2mod3 == 0 || p < smallest_2mod3)) smallest_2mod3 = p;
  }
  if (rest > 1) {
    if (rest == 3) divisible_by_3 = true;
    if (rest % 3 == 2 && (smallest_2mod3 == 0 || rest < smallest_2mod3)) smallest_2mod3 = rest;
  }
  if (smallest_2mod3 != 0) return {GroupTypeTag::Kind::TypeI, smallest_2mod3};
  if (divisible_by_3) return {GroupTypeTag::Kind::TypeII, 0};
  return {GroupTypeTag::Kind::TypeIII, g.exponent()};
}

int64_t max_sumfree_size(const GroupSpec& g) {
  const int64_t n = g.order();
  GroupTypeTag tag = classify_group_type(g);
  int64_t num = 0, den = 1;
  switch (tag.kind) {
    case GroupTypeTag::Kind::TypeI:
      num = n * (tag.param + 1);
      den = 3 * tag.param;
      break;
    case GroupTypeTag::Kind::TypeII:
      num = n;
      den = 3;
      break;
    case GroupTypeTag::Kind::TypeIII:
      num = n * (tag.param - 1);
      den = 3 * tag.param;
      break;
  }
  if (num % den != 0)
    throw std::logic_error("max_sumfree_size: formula not integral for " + format_group_spec(g));
  return num / den;
}

namespace {

[[noreturn]] void parse_fail(std::size_t col, const std::string& what) {
  throw std::invalid_argument("group spec parse error at column " + std::to_string(col + 1) +
                              ": " + what);
}

int64_t parse_int(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
    parse_fail(pos, "expected a number");
  int64_t v = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    v = v * 10 + (text[pos] - '0');
    if (v > (int64_t{1} << 40)) parse_fail(pos, "number too large");
    ++pos;
  }
  return v;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text, int64_t cap) {
  std::vector<int64_t> orders;
  std::size_t pos = 0;
  if (text.empty()) parse_fail(0, "empty group spec");
  while (true) {
    if (pos >= text.size() || (text[pos] != 'Z' && text[pos] != 'z'))
      parse_fail(pos, "expected 'Z'");
    ++pos;
    std::size_t at = pos;
    int64_t m = parse_int(text, pos);
    if (m < 2) parse_fail(at, "cyclic order must be >= 2");
    int64_t reps = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      at = pos;
      reps = parse_int(text, pos);
      if (reps < 1) parse_fail(at, "exponent must be >= 1");
      if (reps > 64) parse_fail(at, "exponent too large");
    }
    for (int64_t r = 0; r < reps; ++r) orders.push_back(m);
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X') parse_fail(pos, "expected 'x' or end of spec");
    ++pos;
  }
  return GroupSpec::make(std::move(orders), cap);
}

std::string format_group_spec(const GroupSpec& g) {
  std::string out;
  const auto& f = g.factors();
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    if (!out.empty()) out += "x";
    out += "Z" + std::to_string(f[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace schur
