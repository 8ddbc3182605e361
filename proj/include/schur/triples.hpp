#pragma once

#include <cstdint>
#include <vector>

#include "schur/group.hpp"
#include "schur/transform.hpp"

namespace schur {

// Ordered Schur triples: (x,y,z) in A^3 with x+y=z. (x,y,z) and (y,x,z) are
// distinct when x != y; x = y is allowed.
using TripleCount = int64_t;

// Direct pairwise count from the definition.
TripleCount count_schur_naive(const ElementSet& a);

// Same value through the indicator self-convolution: sums r_A(z) over z in A.
TripleCount count_schur_transform(const ElementSet& a, ConvPath path = ConvPath::Auto);

// ST(A u {x}) - ST(A) for x not in A. O(|A|).
int64_t schur_delta_add(const ElementSet& a, int64_t x);

// ST(A) - ST(A \ {x}) for x in A, i.e. the number of ordered Schur triples of
// A containing x in at least one position, each triple counted once. O(|A|).
int64_t st_per_element(const ElementSet& a, int64_t x);
inline int64_t schur_delta_remove(const ElementSet& a, int64_t x) { return st_per_element(a, x); }

bool is_sum_free(const ElementSet& a);

enum class RepMode { Sum, Difference };

// r(z) = #{(x,y) in A x B : x+y = z} (or x-y in difference mode) for every z,
// plus the Pollard tail counts N_r = #{z : r(z) >= r}.
struct RepresentationProfile {
  std::vector<int64_t> r;

  int64_t tail_count(int64_t threshold) const {  // N_threshold
    int64_t c = 0;
    for (int64_t v : r)
      if (v >= threshold) ++c;
    return c;
  }
};

RepresentationProfile representation_profile(const ElementSet& a, const ElementSet& b,
                                             RepMode mode);

struct PollardReport {
  int64_t r = 0;
  int64_t lhs = 0;  // N_1 + ... + N_r
  int64_t rhs = 0;  // r * min{p, |A|+|B|-r}
  bool equality = false;
  // Matched stability cases, subset of {1,2,3,4,5}:
  //   1: min{|A|,|B|} = r
  //   2: |A| + |B| >= p + r
  //   3: |A| = |B| = r+1 and B = x - A for some x
  //   4: A and B are arithmetic progressions with the same common difference
  //   5: r = 1, |A| + |B| = p and A+B misses exactly one point, i.e.
  //      B = x - A^c for some x (Vosper critical pair). Exhaustive sweeps
  //      show equality pairs of this shape that fit none of 1-4, so the
  //      four-case list alone is incomplete.
  std::vector<int> matched_cases;
};

// Requires the ambient group to be Z_p with p prime and 1 <= r <= min(|A|,|B|).
PollardReport pollard_check(const ElementSet& a, const ElementSet& b, int64_t r);

ElementSet sumset(const ElementSet& a, const ElementSet& b);
ElementSet difference_set(const ElementSet& a, const ElementSet& b);

// Stab(S) = {x : S + x = S}. S must be nonempty.
SubgroupHandle stabiliser(const ElementSet& s);

struct KneserReport {
  bool applicable = false;  // |A+B| <= |A| + |B| - 1
  int64_t sumset_size = 0;
  int64_t a_plus_h = 0;
  int64_t b_plus_h = 0;
  int64_t h_size = 0;
  bool pass = false;  // |A+B| = |A+H| + |B+H| - |H| with H = Stab(A+B)
};

KneserReport kneser_check(const ElementSet& a, const ElementSet& b);

}  // namespace schur
