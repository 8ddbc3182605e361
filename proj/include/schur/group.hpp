#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schur {

using std::int64_t;

// Bitmaps and dense transform buffers refuse to grow past this many elements
// unless the caller raises the cap explicitly.
inline constexpr int64_t kDefaultDenseCap = int64_t{1} << 24;

bool is_prime(int64_t v);

// A finite abelian group given as a product of cyclic factors Z_m1 x ... x Z_mk.
// Factors are kept exactly as given (no invariant-factor normalization): the
// constructions reference specific coordinates, e.g. the first coordinate of
// Z_3^n. Elements are addressed by a canonical mixed-radix index in [0, order)
// with the first factor as the most significant digit, so for Z_2^n the index
// of a 0/1 vector is the integer it spells in binary.
class GroupSpec {
 public:
  static GroupSpec make(std::vector<int64_t> orders, int64_t cap = kDefaultDenseCap);

  const std::vector<int64_t>& factors() const { return factors_; }
  int64_t rank() const { return static_cast<int64_t>(factors_.size()); }
  int64_t order() const { return order_; }
  int64_t exponent() const;  // lcm of the factor orders

  int64_t index_of(std::span<const int64_t> coords) const;
  std::vector<int64_t> coords_of(int64_t index) const;

  int64_t add_index(int64_t i, int64_t j) const;
  int64_t neg_index(int64_t i) const;

  bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }

 private:
  GroupSpec() = default;

  std::vector<int64_t> factors_;
  std::vector<int64_t> strides_;
  int64_t order_ = 0;
};

struct GroupElement {
  std::vector<int64_t> coords;
  int64_t index = 0;
};

GroupSpec make_group(std::vector<int64_t> orders, int64_t cap = kDefaultDenseCap);

GroupElement element_at(const GroupSpec& g, int64_t index);
GroupElement element_of(const GroupSpec& g, std::vector<int64_t> coords);
GroupElement add(const GroupSpec& g, const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupSpec& g, const GroupElement& x);

// Dense membership bitmap over canonical indices with cached cardinality.
// Carries its group by value; mutation is cheap and allocation-free.
class ElementSet {
 public:
  explicit ElementSet(GroupSpec group);
  static ElementSet from_indices(GroupSpec group, std::span<const int64_t> indices);
  static ElementSet from_indices(GroupSpec group, std::initializer_list<int64_t> indices);

  const GroupSpec& group() const { return group_; }
  int64_t group_order() const { return group_.order(); }
  int64_t size() const { return card_; }
  bool empty() const { return card_ == 0; }

  bool contains(int64_t index) const {
    return (bits_[static_cast<std::size_t>(index >> 6)] >> (index & 63)) & 1;
  }
  void insert(int64_t index);
  void erase(int64_t index);
  void clear();

  std::vector<int64_t> indices() const;  // ascending
  ElementSet complement() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        int b = __builtin_ctzll(word);
        f(static_cast<int64_t>(w * 64 + static_cast<std::size_t>(b)));
        word &= word - 1;
      }
    }
  }

  bool operator==(const ElementSet& o) const {
    return group_ == o.group_ && bits_ == o.bits_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

 private:
  void check_index(int64_t index) const;

  GroupSpec group_;
  std::vector<std::uint64_t> bits_;
  int64_t card_ = 0;
};

struct SubgroupHandle {
  ElementSet carrier;
  int64_t index_in_g = 0;  // [G : H]
};

// Checks zero membership, closure under addition and negation, and the
// order/index bookkeeping. Used by tests and debug assertions.
bool is_valid_subgroup(const SubgroupHandle& h);

// Homomorphism G -> Z_m given by the images of the factor generators.
struct CyclicHom {
  int64_t modulus = 1;
  std::vector<int64_t> gen_images;

  int64_t apply_coords(std::span<const int64_t> coords) const;
  int64_t apply_index(const GroupSpec& g, int64_t index) const;
  ElementSet kernel(const GroupSpec& g) const;
};

// All subgroups H with [G:H] = q, each realized as the kernel of a surjective
// homomorphism G -> Z_q; proportional homomorphisms are merged by forcing the
// first nonzero generator image to 1. Empty when q does not divide exp(G).
std::vector<SubgroupHandle> subgroups_of_prime_index(const GroupSpec& g, int64_t q);

// All surjective homomorphisms G -> Z_m, ordered lexicographically by their
// generator-image tuples. Requires m | exp(G).
std::vector<CyclicHom> surjections_to_cyclic(const GroupSpec& g, int64_t m);

struct GroupTypeTag {
  enum class Kind { TypeI, TypeII, TypeIII };
  Kind kind = Kind::TypeIII;
  // The witnessing prime p for type I, the exponent m for type III, 0 for II.
  int64_t param = 0;

  std::string str() const;
  bool operator==(const GroupTypeTag& o) const = default;
};

GroupTypeTag classify_group_type(const GroupSpec& g);

// Largest cardinality of a sum-free subset of G:
//   (1/3 + 1/3p)n for type I(p), n/3 for type II, (1/3 - 1/3m)n for type III(m).
// All three are exact integers under their type hypotheses.
int64_t max_sumfree_size(const GroupSpec& g);

// Grammar: atom `Z<m>`, power `Z<m>^<k>`, product with `x` (e.g. "Z3xZ7",
// "Z2^5"). Case-insensitive, whitespace-free. Errors mention the column.
GroupSpec parse_group_spec(std::string_view text, int64_t cap = kDefaultDenseCap);
std::string format_group_spec(const GroupSpec& g);

}  // namespace schur
