#pragma once

// Permutations of {1..n} in one-line form, their canonical cycle
// decomposition, and the update rules relating the standard permutation of a
// word to that of the word with a sentinel inserted.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bwtnice {

using Element = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  // `images[j-1]` is the image of j. Throws kInvalidPermutation unless the
  // values form a bijection on {1..images.size()}.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }

  // 1-based application: (*this)(j) = image of j.
  Element operator()(Element j) const { return images_[j - 1]; }

  std::span<const Element> one_line() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

// Cycles in canonical form: each cycle starts at its minimum, cycles are
// sorted by their minima.
struct CycleDecomposition {
  std::vector<std::vector<Element>> cycles;

  std::size_t count() const noexcept { return cycles.size(); }

  // "(1,4,6)(2)(3,5)"
  std::string to_string() const;

  friend bool operator==(const CycleDecomposition&,
                         const CycleDecomposition&) = default;
};

// sigma_w(i) < sigma_w(j) iff w_i < w_j, or w_i == w_j and i < j. Counting
// sort over the byte alphabet, O(n + 256).
Permutation standard_permutation(std::string_view w);

CycleDecomposition cycle_decomposition(const Permutation& pi);
std::size_t cycle_count(const Permutation& pi);

// Length of the cycle through 1 equals n.
bool is_cyclic(const Permutation& pi);

// (-1)^(n - c).
int sign(const Permutation& pi);

// Standard permutation of dol(w, i), from sigma_w via the closed form:
// j < i -> sigma_w(j)+1, j == i -> 1, j > i -> sigma_w(j-1)+1.
Permutation sigma_i_direct(const Permutation& sigma_w, std::size_t i);
Permutation sigma_i_direct(std::string_view w, std::size_t i);

// sigma_{i+1} = (1, sigma_i(i+1)) * sigma_i. Requires sigma_i(i) == 1 and
// i < size().
Permutation apply_dollar_step(const Permutation& sigma_i, std::size_t i);

enum class TranspositionKind { kSplit, kMerge };

struct TranspositionResult {
  Permutation product;
  TranspositionKind kind;
};

// (pi(x), pi(y)) * pi. Split when x and y share a cycle, merge otherwise.
TranspositionResult transpose_cycles(const Permutation& pi, Element x,
                                     Element y);

// Parses "(1,4,6)(2)(3,5)" (whitespace tolerated) into a permutation of the
// given size; every element 1..n must appear exactly once.
Permutation parse_cycles(std::string_view text, std::size_t n);

}  // namespace bwtnice
