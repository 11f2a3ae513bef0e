#pragma once

// Structural limits on nice positions read off the standard permutation.
//
// With the cycles of sigma_w sorted by their minima l_1 < ... < l_c:
//   - all nice positions have the parity opposite to c;
//   - every nice i satisfies i >= L + 1 with L = l_c, and i >= 2b + c where b
//     counts the bad pairs (l_j, l_j + 1), j < c, with l_j + 1 in the cycle
//     of l_j;
//   - h(w) <= floor((n+1)/2) and h(w) <= ceil((n-L+1)/2).

#include <cstddef>
#include <span>
#include <string_view>

#include "bwtnice/permutation.hpp"

namespace bwtnice {

enum class Parity { kEven, kOdd };

struct BoundsProfile {
  std::size_t n = 0;
  std::size_t c = 0;
  std::size_t L = 0;
  std::size_t b = 0;
  std::size_t i0 = 0;
  Parity parity = Parity::kEven;
  std::size_t h_max_parity = 0;  // floor((n+1)/2)
  std::size_t h_max_l = 0;       // ceil((n-L+1)/2)
  std::size_t h_max = 0;         // the smaller of the two
};

BoundsProfile bounds_profile(std::string_view w);
BoundsProfile bounds_profile(const Permutation& sigma_w);

// A cycle C of sigma_i is bad with respect to i when i lies outside
// [min C, max C].
bool is_bad_cycle(std::span<const Element> cycle, std::size_t i);

// Test oracles. Each evaluates its implication against the nice set computed
// by find_nice_naive and returns whether the implication held.

// With c_i the cycle count of sigma_i: a nice j > i satisfies j >= i + c_i - 1.
bool check_cycle_count_gap(std::string_view w, std::size_t i, std::size_t j);

// For every bad cycle C of sigma_i: if i > max C no j >= i is nice, and if
// i < min C no j <= i is nice.
bool check_bad_cycle_exclusion(std::string_view w, std::size_t i);

}  // namespace bwtnice
