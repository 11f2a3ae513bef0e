#pragma once

// A forest of splay trees holding the cycles of a permutation of {1..m}.
//
// Each tree stores one cycle as an implicitly keyed sequence: the in-order
// traversal spells the cycle, no keys are kept. Nodes live in an arena indexed
// by element, so element -> node lookup is O(1), and all links are element
// indices with 0 meaning "none". Every walk is iterative because trees may
// degenerate to depth Theta(m).
//
// The forest tracks one distinguished tree, the "first cycle", which always
// contains element 1. The nice-position driver keeps that cycle in the form
// (1, ..., i) at step i.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bwtnice/permutation.hpp"

namespace bwtnice {

class SplayForest {
 public:
  // One tree per cycle. The cycle containing 1 is rotated to start at 1, all
  // others are taken as given (canonical decompositions start at the
  // minimum). Trees are built balanced.
  // kAuto picks packed nodes whenever the size allows it. Forcing kPacked on
  // a forest of 2^21 or more elements throws kInvalidArgument.
  enum class Layout { kAuto, kPacked, kWide };

  explicit SplayForest(const CycleDecomposition& cycles,
                       Layout layout = Layout::kAuto);

  // Same forest, walking the cycles of pi directly.
  explicit SplayForest(const Permutation& pi, Layout layout = Layout::kAuto);

  bool packed() const noexcept { return packed_; }

  std::size_t size() const noexcept { return size_; }
  std::size_t tree_count() const noexcept { return tree_count_; }
  Element first_root() const noexcept { return first_root_; }

  // Number of single-edge rotations performed so far.
  std::uint64_t rotation_count() const noexcept { return rotations_; }

  // Moves x to the root of its tree; in-order sequences are unchanged.
  void splay(Element x);

  // Splays x and reports whether it shares the first cycle's tree, by
  // checking whether the remembered first root acquired a parent. On a yes,
  // x becomes the first root.
  bool same_cycle_as_first(Element x);

  // x must be the root of the first tree. Cuts its right subtree off as a new
  // tree: (A, x, B) becomes (A, x) and (B). Throws kInvalidState if x is not
  // the first root or B is empty.
  void split_after(Element x);

  // `next` is the root of a tree other than the first; `last` is the last
  // element of the first cycle. With the first cycle (A, last) and the other
  // cycle (B, next, D), produces the single cycle (A, last, D, B, next) and
  // makes it the first tree.
  void merge_first_with(Element next, Element last);

  // In-order sequence of the tree containing x. Does not restructure.
  std::vector<Element> in_order(Element x) const;

  // In-order sequences of all trees, ordered by their smallest element.
  std::vector<std::vector<Element>> trees() const;

  Element parent(Element x) const { return parent_of(x); }

  // Hint only: prefetches the node `depth` levels above x, following
  // current links. Has no effect on the forest.
  void prefetch_ancestor(Element x, unsigned depth) const {
    for (unsigned d = 0; d < depth && x != 0; ++d) x = parent_of(x);
    if (x == 0) return;
    if (packed_) {
      __builtin_prefetch(&words_[x], 1);
    } else {
      __builtin_prefetch(&wide_[x], 1);
    }
  }

 private:
  // Links of one node. Forests below 2^21 elements pack the three links into
  // one 64-bit word (21 bits each), bigger ones use three 32-bit fields.
  struct Node {
    Element parent = 0;
    Element left = 0;
    Element right = 0;
  };
  static constexpr unsigned kPackedBits = 21;
  static constexpr std::uint64_t kPackedMask =
      (std::uint64_t{1} << kPackedBits) - 1;

  Element get(Element x, unsigned field) const {
    if (packed_) {
      return static_cast<Element>(
          (words_[x] >> (field * kPackedBits)) & kPackedMask);
    }
    const Node& n = wide_[x];
    return field == 0 ? n.parent : field == 1 ? n.left : n.right;
  }
  void put(Element x, unsigned field, Element v) {
    if (packed_) {
      const unsigned shift = field * kPackedBits;
      words_[x] = (words_[x] & ~(kPackedMask << shift)) |
                  (std::uint64_t{v} << shift);
      return;
    }
    Node& n = wide_[x];
    (field == 0 ? n.parent : field == 1 ? n.left : n.right) = v;
  }
  Element parent_of(Element x) const { return get(x, 0); }
  Element left_of(Element x) const { return get(x, 1); }
  Element right_of(Element x) const { return get(x, 2); }
  void set_parent(Element x, Element v) { put(x, 0, v); }
  void set_left(Element x, Element v) { put(x, 1, v); }
  void set_right(Element x, Element v) { put(x, 2, v); }

  Element build_tree(std::span<const Element> sequence);
  void rotate_up(Element x);
  Element root_of(Element x) const;
  Element rightmost(Element x) const;

  // Large arenas go on 2 MiB aligned, huge-page advised memory.
  template <class T>
  struct ArenaAllocator {
    using value_type = T;
    ArenaAllocator() = default;
    template <class U>
    ArenaAllocator(const ArenaAllocator<U>&) noexcept {}
    T* allocate(std::size_t n);
    void deallocate(T* p, std::size_t n) noexcept;
    friend bool operator==(const ArenaAllocator&,
                           const ArenaAllocator&) = default;
  };
  void allocate(std::size_t m, Layout layout);

  std::size_t size_ = 0;
  bool packed_ = true;
  std::vector<std::uint64_t, ArenaAllocator<std::uint64_t>> words_;
  std::vector<Node, ArenaAllocator<Node>> wide_;
  Element first_root_ = 0;
  std::size_t tree_count_ = 0;
  std::uint64_t rotations_ = 0;
};

}  // namespace bwtnice
