#pragma once

// Words over a byte alphabet: rotations, BWT construction and inversion,
// run-lengths, primitivity and the Lyndon test.
//
// A word is a std::string whose bytes are compared as unsigned values
// (std::char_traits<char> orders characters as unsigned char). Byte 0x00 is
// reserved for the sentinel, which is therefore smaller than every symbol.
// Positions in every public interface are 1-based.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bwtnice {

inline constexpr char kSentinel = '\0';

// Throws kInvalidArgument if `w` contains the reserved sentinel byte.
void require_sentinel_free(std::string_view w);

// Number of sentinel bytes in `w`.
std::size_t sentinel_count(std::string_view w);

std::vector<std::string> rotations(std::string_view w);

// Last column of the lexicographically sorted rotation matrix. Defined for
// every non-empty word, including non-primitive ones.
std::string bwt(std::string_view v);

// Inverts a BWT image containing exactly one sentinel. Returns v (without the
// sentinel) such that bwt(v + sentinel) == w.
std::string inverse_bwt_sentinel(std::string_view w);

std::vector<std::size_t> runlengths(std::string_view w);
std::size_t runlength_gcd(std::string_view w);

// True iff w == bwt(v) for some v: the standard permutation of w has exactly
// gcd(run-lengths) cycles.
bool is_bwt_image(std::string_view w);

bool is_primitive(std::string_view v);
bool is_lyndon(std::string_view v);

// Inserts the sentinel so that it occupies position i (1 <= i <= |w|+1).
std::string dol(std::string_view w, std::size_t i);

}  // namespace bwtnice
