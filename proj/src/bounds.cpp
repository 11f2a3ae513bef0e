#include "bwtnice/bounds.hpp"

#include <algorithm>

#include "bwtnice/error.hpp"
#include "bwtnice/nice_finder.hpp"

namespace bwtnice {

BoundsProfile bounds_profile(std::string_view w) {
  if (w.empty()) {
    throw Error(ErrorCode::kEmptyWord, "word must have at least one symbol");
  }
  return bounds_profile(standard_permutation(w));
}

BoundsProfile bounds_profile(const Permutation& sigma_w) {
  const CycleDecomposition decomposition = cycle_decomposition(sigma_w);
  const auto& cycles = decomposition.cycles;

  BoundsProfile p;
  p.n = sigma_w.size();
  p.c = cycles.size();
  p.L = cycles.empty() ? 0 : cycles.back().front();

  std::vector<std::size_t> cycle_of(p.n + 2, 0);
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    for (Element e : cycles[j]) cycle_of[e] = j;
  }
  // The last cycle never contributes a bad pair.
  for (std::size_t j = 0; j + 1 < cycles.size(); ++j) {
    const Element next = cycles[j].front() + 1;
    if (next <= p.n && cycle_of[next] == j) ++p.b;
  }

  p.i0 = std::max(p.L + 1, 2 * p.b + p.c);
  p.parity = p.c % 2 == 0 ? Parity::kOdd : Parity::kEven;
  p.h_max_parity = (p.n + 1) / 2;
  p.h_max_l = (p.n - p.L + 2) / 2;
  p.h_max = std::min(p.h_max_parity, p.h_max_l);
  return p;
}

bool is_bad_cycle(std::span<const Element> cycle, std::size_t i) {
  const auto [lo, hi] = std::minmax_element(cycle.begin(), cycle.end());
  return i < *lo || i > *hi;
}

bool check_cycle_count_gap(std::string_view w, std::size_t i, std::size_t j) {
  const NiceReport truth = find_nice_naive(w);
  const bool j_nice =
      std::binary_search(truth.nice.begin(), truth.nice.end(), j);
  if (!j_nice || j <= i) return true;
  const std::size_t c_i = cycle_count(sigma_i_direct(w, i));
  return j + 1 >= i + c_i;
}

bool check_bad_cycle_exclusion(std::string_view w, std::size_t i) {
  const NiceReport truth = find_nice_naive(w);
  const CycleDecomposition cycles = cycle_decomposition(sigma_i_direct(w, i));
  for (const auto& cycle : cycles.cycles) {
    if (!is_bad_cycle(cycle, i)) continue;
    const Element lo = cycle.front();
    const Element hi = *std::max_element(cycle.begin(), cycle.end());
    for (std::size_t j : truth.nice) {
      if (i > hi && j >= i) return false;
      if (i < lo && j <= i) return false;
    }
  }
  return true;
}

}  // namespace bwtnice
