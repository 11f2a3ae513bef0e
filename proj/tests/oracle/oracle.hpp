#pragma once

// Reference implementations used only by the tests. Each one is written from
// the definitions with no shared code path into the library: rotations are
// materialized and sorted as strings, standard permutations come from a
// stable sort, and preimages are found by exhaustive search.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

// 1-based one-line permutation stored 0-based: p[j-1] is the image of j.
using Perm = std::vector<std::size_t>;

std::string bwt_by_matrix(std::string_view v);

Perm standard_perm_by_sort(std::string_view w);

std::size_t cycle_count(const Perm& p);

// Sign from the inversion count.
int inversion_sign(const Perm& p);

// Inserts '\0' at 1-based position i.
std::string insert_sentinel(std::string_view w, std::size_t i);

// Positions i in 1..n+1 where the stable-sort permutation of the word with
// the sentinel at i is one cycle.
std::vector<std::size_t> nice_positions(std::string_view w);

// Every v over the letters of `image` (sentinel removed, same multiset) with
// bwt_by_matrix(v + '\0') == image. Exponential; small inputs only.
std::vector<std::string> preimages_by_search(std::string_view image);

// Some arrangement of the letters of w whose BWT is w, if any.
// Exponential; small inputs only.
std::optional<std::string> bwt_preimage_by_search(std::string_view w);

bool is_bwt_image_by_search(std::string_view w);

// Strictly smaller than each of its proper suffixes.
bool is_lyndon_by_suffixes(std::string_view v);

// Smallest d dividing n with v == (v[0..d))^(n/d); primitive iff d == n.
std::size_t primitive_root_length(std::string_view v);

// Calls f on every word of length n over 'a'..'a'+k-1, in lexicographic order.
void for_each_word(std::size_t k, std::size_t n,
                   const std::function<void(const std::string&)>& f);

std::string random_word(std::mt19937_64& rng, std::size_t n, std::size_t k);

}  // namespace oracle
