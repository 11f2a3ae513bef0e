#include "bwtnice/splay_forest.hpp"

#include <algorithm>
#include <cstdlib>
#include <new>

#if defined(__linux__)
#include <sys/mman.h>
#endif

#include "bwtnice/error.hpp"

namespace bwtnice {

namespace {

constexpr std::size_t kHugePage = std::size_t{2} << 20;

}  // namespace

// Node accesses are random, so on big inputs TLB misses add up.
template <class T>
T* SplayForest::ArenaAllocator<T>::allocate(std::size_t n) {
  const std::size_t bytes = n * sizeof(T);
  if (bytes < kHugePage) return std::allocator<T>{}.allocate(n);
  const std::size_t rounded = (bytes + kHugePage - 1) / kHugePage * kHugePage;
  void* p = std::aligned_alloc(kHugePage, rounded);
  if (p == nullptr) throw std::bad_alloc();
#if defined(__linux__) && defined(MADV_HUGEPAGE)
  madvise(p, rounded, MADV_HUGEPAGE);
#endif
  return static_cast<T*>(p);
}

template <class T>
void SplayForest::ArenaAllocator<T>::deallocate(T* p, std::size_t n) noexcept {
  if (n * sizeof(T) < kHugePage) {
    std::allocator<T>{}.deallocate(p, n);
  } else {
    std::free(p);
  }
}

template struct SplayForest::ArenaAllocator<SplayForest::Node>;
template struct SplayForest::ArenaAllocator<std::uint64_t>;

void SplayForest::allocate(std::size_t m, Layout layout) {
  size_ = m;
  packed_ = layout != Layout::kWide && m <= kPackedMask;
  if (layout == Layout::kPacked && !packed_) {
    throw Error(ErrorCode::kInvalidArgument,
                "too many elements for packed nodes: " + std::to_string(m));
  }
  if (packed_) {
    words_.assign(m + 1, 0);
  } else {
    wide_.assign(m + 1, Node{});
  }
}

SplayForest::SplayForest(const CycleDecomposition& cycles, Layout layout) {
  std::size_t m = 0;
  for (const auto& cycle : cycles.cycles) m += cycle.size();
  allocate(m, layout);

  std::vector<bool> seen(m + 1, false);
  std::vector<Element> rotated;
  for (const auto& cycle : cycles.cycles) {
    if (cycle.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty cycle");
    }
    for (Element e : cycle) {
      if (e < 1 || e > m || seen[e]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cycles do not partition 1.." + std::to_string(m));
      }
      seen[e] = true;
    }
    const auto one = std::find(cycle.begin(), cycle.end(), Element{1});
    if (one != cycle.end()) {
      rotated.assign(one, cycle.end());
      rotated.insert(rotated.end(), cycle.begin(), one);
      first_root_ = build_tree(rotated);
    } else {
      build_tree(cycle);
    }
  }
  tree_count_ = cycles.count();
}

SplayForest::SplayForest(const Permutation& pi, Layout layout) {
  const std::size_t m = pi.size();
  allocate(m, layout);
  std::vector<bool> seen(m + 1, false);
  std::vector<Element> cycle;
  // Scanning upward from 1 starts every cycle at its minimum.
  for (Element start = 1; start <= m; ++start) {
    if (seen[start]) continue;
    cycle.clear();
    for (Element e = start; !seen[e]; e = pi(e)) {
      seen[e] = true;
      cycle.push_back(e);
    }
    const Element root = build_tree(cycle);
    if (start == 1) first_root_ = root;
    ++tree_count_;
  }
}

Element SplayForest::build_tree(std::span<const Element> sequence) {
  // Balanced build: the middle of each range becomes the subtree root.
  struct Range {
    std::size_t lo, hi;
    Element parent;
    bool left;
  };
  std::vector<Range> stack{{0, sequence.size(), 0, false}};
  Element root = 0;
  while (!stack.empty()) {
    const Range r = stack.back();
    stack.pop_back();
    if (r.lo >= r.hi) continue;
    const std::size_t mid = r.lo + (r.hi - r.lo) / 2;
    const Element e = sequence[mid];
    set_parent(e, r.parent);
    if (r.parent == 0) {
      root = e;
    } else if (r.left) {
      set_left(r.parent, e);
    } else {
      set_right(r.parent, e);
    }
    stack.push_back({r.lo, mid, e, true});
    stack.push_back({mid + 1, r.hi, e, false});
  }
  return root;
}

void SplayForest::rotate_up(Element x) {
  const Element p = parent_of(x);
  const Element g = parent_of(p);
  if (left_of(p) == x) {
    const Element b = right_of(x);
    set_left(p, b);
    if (b != 0) set_parent(b, p);
    set_right(x, p);
  } else {
    const Element b = left_of(x);
    set_right(p, b);
    if (b != 0) set_parent(b, p);
    set_left(x, p);
  }
  set_parent(p, x);
  set_parent(x, g);
  if (g != 0) {
    if (left_of(g) == p) {
      set_left(g, x);
    } else {
      set_right(g, x);
    }
  }
  ++rotations_;
}

void SplayForest::splay(Element x) {
  while (parent_of(x) != 0) {
    const Element p = parent_of(x);
    const Element g = parent_of(p);
    if (g == 0) {
      rotate_up(x);  // zig
    } else if ((left_of(g) == p) == (left_of(p) == x)) {
      rotate_up(p);  // zig-zig
      rotate_up(x);
    } else {
      rotate_up(x);  // zig-zag
      rotate_up(x);
    }
  }
  // The old first root gains a parent exactly when x was in its tree.
  if (parent_of(first_root_) != 0) first_root_ = x;
}

bool SplayForest::same_cycle_as_first(Element x) {
  splay(x);
  return first_root_ == x;
}

void SplayForest::split_after(Element x) {
  if (x != first_root_ || parent_of(x) != 0) {
    throw Error(ErrorCode::kInvalidState,
                "split point " + std::to_string(x) +
                    " is not the root of the first cycle");
  }
  const Element b = right_of(x);
  if (b == 0) {
    throw Error(ErrorCode::kInvalidState,
                "split after the last element of a cycle");
  }
  set_right(x, 0);
  set_parent(b, 0);
  ++tree_count_;
}

void SplayForest::merge_first_with(Element next, Element last) {
  if (parent_of(next) != 0 || next == first_root_) {
    throw Error(ErrorCode::kInvalidState,
                "merge needs " + std::to_string(next) +
                    " at the root of a tree other than the first");
  }
  // (B, next, D) -> (B, next) and (D).
  const Element d = right_of(next);
  set_right(next, 0);
  if (d != 0) set_parent(d, 0);

  splay(last);
  if (first_root_ != last || right_of(last) != 0) {
    throw Error(ErrorCode::kInvalidState,
                std::to_string(last) + " is not the last element of the "
                                       "first cycle");
  }
  if (d != 0) {
    // (D', x) with x at the root, then (A, last) <- (D', x) <- (B, next).
    const Element x = rightmost(d);
    splay(x);
    set_right(last, x);
    set_parent(x, last);
    set_right(x, next);
    set_parent(next, x);
  } else {
    set_right(last, next);
    set_parent(next, last);
  }
  --tree_count_;
}

Element SplayForest::root_of(Element x) const {
  while (parent_of(x) != 0) x = parent_of(x);
  return x;
}

Element SplayForest::rightmost(Element x) const {
  while (right_of(x) != 0) x = right_of(x);
  return x;
}

std::vector<Element> SplayForest::in_order(Element x) const {
  std::vector<Element> out;
  Element cur = root_of(x);
  while (left_of(cur) != 0) cur = left_of(cur);
  while (cur != 0) {
    out.push_back(cur);
    if (right_of(cur) != 0) {
      cur = right_of(cur);
      while (left_of(cur) != 0) cur = left_of(cur);
    } else {
      Element child = cur;
      cur = parent_of(cur);
      while (cur != 0 && right_of(cur) == child) {
        child = cur;
        cur = parent_of(cur);
      }
    }
  }
  return out;
}

std::vector<std::vector<Element>> SplayForest::trees() const {
  std::vector<std::vector<Element>> out;
  for (Element e = 1; e <= size_; ++e) {
    if (parent_of(e) == 0) out.push_back(in_order(e));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) <
           *std::min_element(b.begin(), b.end());
  });
  return out;
}

}  // namespace bwtnice
