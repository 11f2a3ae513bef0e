#pragma once

// Pseudo-cycles of a permutation pi of {1..n}: non-empty sets S split as
// S_left < S_right (either part may be empty) with
//   pi(S) = (S_left - 1) ∪ S_right.
// The critical interval is R = [a+1, b] with a = max S_left (0 if empty) and
// b = min S_right (n+1 if empty). Inserting the sentinel at any i in R turns
// S into cycles of sigma_i that avoid i, so i is nice exactly when no
// pseudo-cycle of sigma_w has i in its critical interval.
//
// Enumeration is exhaustive over subsets, O(2^n * n), and is meant as an
// independent oracle for small words.

#include <cstddef>
#include <string_view>
#include <vector>

#include "bwtnice/permutation.hpp"

namespace bwtnice {

inline constexpr std::size_t kDefaultPseudoCycleCap = 16;
inline constexpr std::size_t kMaxPseudoCycleCap = 30;

// Sorted ascending.
using ElementSet = std::vector<Element>;

struct PseudoCycle {
  ElementSet left;
  ElementSet right;
  Element a = 0;  // max left, 0 if empty
  Element b = 0;  // min right, n+1 if empty

  ElementSet elements() const;
  bool critical_contains(std::size_t i) const { return a + 1 <= i && i <= b; }

  friend bool operator==(const PseudoCycle&, const PseudoCycle&) = default;
};

// {x in S : x < i} ∪ {x+1 : x in S, x >= i}
ElementSet shift(const ElementSet& s, std::size_t i);

// {x in S : x < i} ∪ {x-1 : x in S, x > i}. Throws kInvalidArgument if i is
// in S.
ElementSet unshift(const ElementSet& s, std::size_t i);

// Every (S, partition) pair, ordered by subset bitmask and then by split
// point. Throws kTooLarge when pi.size() exceeds cap (cap itself is limited
// to kMaxPseudoCycleCap).
std::vector<PseudoCycle> enumerate_pseudo_cycles(
    const Permutation& pi, std::size_t cap = kDefaultPseudoCycleCap);

// Positions 1..n+1 covered by no critical interval.
std::vector<std::size_t> nice_by_characterization(
    std::string_view w, std::size_t cap = kDefaultPseudoCycleCap);

// Checks the cycle / pseudo-cycle correspondence at position i in both
// directions: every cycle U of sigma_i avoiding i unshifts to a pseudo-cycle
// whose critical interval holds i, and every pseudo-cycle whose critical
// interval holds i shifts to a union of cycles of sigma_i.
bool check_cycle_correspondence(std::string_view w, std::size_t i,
                                std::size_t cap = kDefaultPseudoCycleCap);

}  // namespace bwtnice
