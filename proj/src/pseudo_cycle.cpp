#include "bwtnice/pseudo_cycle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "bwtnice/error.hpp"
#include "bwtnice/word.hpp"

namespace bwtnice {

namespace {

using Mask = std::uint64_t;  // bit k <-> element k

Mask bit(Element e) { return Mask{1} << e; }

ElementSet to_set(Mask m) {
  ElementSet out;
  while (m != 0) {
    out.push_back(static_cast<Element>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

void check_cap(std::size_t n, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxPseudoCycleCap);
  if (n > limit) {
    throw Error(ErrorCode::kTooLarge,
                "pseudo-cycle enumeration is exponential; n = " +
                    std::to_string(n) + " exceeds cap " +
                    std::to_string(limit));
  }
}

// Calls visit(left, right) for every pseudo-cycle partition.
template <typename Visit>
void for_each_pseudo_cycle(const Permutation& pi, Visit&& visit) {
  const std::size_t n = pi.size();
  const Mask all = (Mask{1} << n) - 1;
  for (Mask raw = 1; raw <= all; ++raw) {
    const Mask s = raw << 1;
    Mask image = 0;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      image |= bit(pi(static_cast<Element>(std::countr_zero(rest))));
    }
    // Try every split point: left grows by the smallest remaining element.
    Mask left = 0;
    Mask right = s;
    for (;;) {
      // Left containing 1 would map to 0, which is never in the image.
      if (((left >> 1) | right) == image && (left & bit(1)) == 0) {
        visit(left, right);
      }
      if (right == 0) break;
      const Mask low = right & (~right + 1);
      left |= low;
      right &= ~low;
    }
  }
}

std::vector<bool> covered_positions(const Permutation& pi) {
  const std::size_t n = pi.size();
  std::vector<bool> covered(n + 2, false);
  for_each_pseudo_cycle(pi, [&](Mask left, Mask right) {
    const std::size_t a =
        left == 0 ? 0 : static_cast<std::size_t>(63 - std::countl_zero(left));
    const std::size_t b =
        right == 0 ? n + 1 : static_cast<std::size_t>(std::countr_zero(right));
    for (std::size_t i = a + 1; i <= b; ++i) covered[i] = true;
  });
  return covered;
}

}  // namespace

ElementSet PseudoCycle::elements() const {
  ElementSet out(left);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

ElementSet shift(const ElementSet& s, std::size_t i) {
  ElementSet out;
  out.reserve(s.size());
  for (Element x : s) out.push_back(x < i ? x : x + 1);
  return out;
}

ElementSet unshift(const ElementSet& s, std::size_t i) {
  ElementSet out;
  out.reserve(s.size());
  for (Element x : s) {
    if (x == i) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unshift position " + std::to_string(i) +
                      " is an element of the set");
    }
    out.push_back(x < i ? x : x - 1);
  }
  return out;
}

std::vector<PseudoCycle> enumerate_pseudo_cycles(const Permutation& pi,
                                                 std::size_t cap) {
  check_cap(pi.size(), cap);
  const auto n = static_cast<Element>(pi.size());
  std::vector<PseudoCycle> out;
  for_each_pseudo_cycle(pi, [&](Mask left, Mask right) {
    PseudoCycle pc;
    pc.left = to_set(left);
    pc.right = to_set(right);
    pc.a = pc.left.empty() ? 0 : pc.left.back();
    pc.b = pc.right.empty() ? n + 1 : pc.right.front();
    out.push_back(std::move(pc));
  });
  return out;
}

std::vector<std::size_t> nice_by_characterization(std::string_view w,
                                                  std::size_t cap) {
  if (w.empty()) {
    throw Error(ErrorCode::kEmptyWord, "word must have at least one symbol");
  }
  require_sentinel_free(w);
  check_cap(w.size(), cap);
  const std::vector<bool> covered = covered_positions(standard_permutation(w));
  std::vector<std::size_t> nice;
  for (std::size_t i = 1; i <= w.size() + 1; ++i) {
    if (!covered[i]) nice.push_back(i);
  }
  return nice;
}

bool check_cycle_correspondence(std::string_view w, std::size_t i,
                                std::size_t cap) {
  require_sentinel_free(w);
  check_cap(w.size(), cap);
  const Permutation sigma_w = standard_permutation(w);
  const Permutation sigma_i = sigma_i_direct(sigma_w, i);
  const std::vector<PseudoCycle> pseudo = enumerate_pseudo_cycles(sigma_w, cap);

  std::set<std::pair<ElementSet, ElementSet>> with_i;
  for (const PseudoCycle& pc : pseudo) {
    if (pc.critical_contains(i)) with_i.emplace(pc.left, pc.right);
  }

  // Cycles of sigma_i avoiding i -> pseudo-cycles with i in R.
  for (const auto& cycle : cycle_decomposition(sigma_i).cycles) {
    ElementSet u(cycle);
    std::sort(u.begin(), u.end());
    if (std::binary_search(u.begin(), u.end(), static_cast<Element>(i))) {
      continue;
    }
    ElementSet left;
    ElementSet right;
    for (Element x : u) {
      if (x < i) {
        left.push_back(x);
      } else {
        right.push_back(x - 1);
      }
    }
    if (!with_i.contains({left, right})) return false;
  }

  // Pseudo-cycles with i in R -> sigma_i-invariant sets avoiding i.
  for (const auto& [left, right] : with_i) {
    ElementSet s(left);
    s.insert(s.end(), right.begin(), right.end());
    const ElementSet u = shift(s, i);
    ElementSet image;
    for (Element x : u) image.push_back(sigma_i(x));
    std::sort(image.begin(), image.end());
    if (image != u) return false;
  }
  return true;
}

}  // namespace bwtnice
