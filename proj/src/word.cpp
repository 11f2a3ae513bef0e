#include "bwtnice/word.hpp"

#include <algorithm>
#include <numeric>

#include "bwtnice/error.hpp"
#include "bwtnice/permutation.hpp"

namespace bwtnice {

namespace {

void require_nonempty(std::string_view w) {
  if (w.empty()) {
    throw Error(ErrorCode::kEmptyWord, "word must have at least one symbol");
  }
}

// Three-way comparison of rotations starting at a and b (0-based), bytes as
// unsigned values.
int compare_rotations(std::string_view w, std::size_t a, std::size_t b) {
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = static_cast<unsigned char>(w[(a + k) % n]);
    const auto y = static_cast<unsigned char>(w[(b + k) % n]);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

}  // namespace

void require_sentinel_free(std::string_view w) {
  if (w.find(kSentinel) != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "word contains the reserved sentinel byte");
  }
}

std::size_t sentinel_count(std::string_view w) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), kSentinel));
}

std::vector<std::string> rotations(std::string_view w) {
  require_nonempty(w);
  std::vector<std::string> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::string r(w.substr(i));
    r.append(w.substr(0, i));
    out.push_back(std::move(r));
  }
  return out;
}

std::string bwt(std::string_view v) {
  require_nonempty(v);
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Equal rotations carry equal last characters, so stability is irrelevant.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_rotations(v, a, b) < 0;
  });
  std::string out(n, '\0');
  for (std::size_t r = 0; r < n; ++r) {
    out[r] = v[(order[r] + n - 1) % n];
  }
  return out;
}

std::string inverse_bwt_sentinel(std::string_view w) {
  require_nonempty(w);
  if (sentinel_count(w) != 1) {
    throw Error(ErrorCode::kBadSentinelCount,
                "expected exactly one sentinel, found " +
                    std::to_string(sentinel_count(w)));
  }
  const Permutation sigma = standard_permutation(w);
  // Row 1 of the matrix is the rotation starting with the sentinel, so w_1 is
  // the last symbol of v; following sigma walks v backwards until the
  // sentinel is reached.
  std::string reversed;
  reversed.reserve(w.size() - 1);
  Element j = 1;
  for (std::size_t step = 0; step < w.size(); ++step) {
    const char c = w[j - 1];
    if (c == kSentinel) break;
    reversed.push_back(c);
    j = sigma(j);
  }
  if (reversed.size() != w.size() - 1) {
    throw Error(ErrorCode::kNotABwtImage,
                "standard permutation is not cyclic");
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<std::size_t> runlengths(std::string_view w) {
  require_nonempty(w);
  std::vector<std::size_t> runs;
  std::size_t len = 1;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w[k] == w[k - 1]) {
      ++len;
    } else {
      runs.push_back(len);
      len = 1;
    }
  }
  runs.push_back(len);
  return runs;
}

std::size_t runlength_gcd(std::string_view w) {
  std::size_t g = 0;
  for (std::size_t r : runlengths(w)) g = std::gcd(g, r);
  return g;
}

bool is_bwt_image(std::string_view w) {
  require_nonempty(w);
  return cycle_count(standard_permutation(w)) == runlength_gcd(w);
}

bool is_primitive(std::string_view v) {
  require_nonempty(v);
  std::string doubled(v);
  doubled.append(v);
  return doubled.find(v, 1) == v.size();
}

bool is_lyndon(std::string_view v) {
  require_nonempty(v);
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (compare_rotations(v, 0, i) >= 0) return false;
  }
  return true;
}

std::string dol(std::string_view w, std::size_t i) {
  if (i < 1 || i > w.size() + 1) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "insertion position " + std::to_string(i) + " outside 1.." +
                    std::to_string(w.size() + 1));
  }
  std::string out;
  out.reserve(w.size() + 1);
  out.append(w.substr(0, i - 1));
  out.push_back(kSentinel);
  out.append(w.substr(i - 1));
  return out;
}

}  // namespace bwtnice
