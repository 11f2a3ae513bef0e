#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bwtnice/error.hpp"
#include "bwtnice/permutation.hpp"
#include "bwtnice/splay_forest.hpp"

using namespace bwtnice;

namespace {

using Seq = std::vector<Element>;

SplayForest forest_of(std::string_view cycles, std::size_t n) {
  return SplayForest(cycle_decomposition(parse_cycles(cycles, n)));
}

}  // namespace

TEST_CASE("build from the initial permutation of acccbccbab") {
  SplayForest f(cycle_decomposition(sigma_i_direct("acccbccbab", 1)));
  CHECK(f.tree_count() == 5);
  CHECK(f.trees() == std::vector<Seq>{{1}, {2}, {3, 7, 10}, {4, 8, 11, 6}, {5, 9}});
  CHECK(f.in_order(11) == Seq{4, 8, 11, 6});
}

TEST_CASE("build edge cases") {
  SplayForest one(cycle_decomposition(parse_cycles("(1,2,3,4,5)", 5)));
  CHECK(one.tree_count() == 1);
  SplayForest fixed(cycle_decomposition(Permutation::identity(7)));
  CHECK(fixed.tree_count() == 7);
  // The cycle through 1 is read starting at 1.
  SplayForest rotated(CycleDecomposition{{{3, 1, 2}}});
  CHECK(rotated.in_order(3) == Seq{1, 2, 3});
  CHECK_THROWS_AS(SplayForest(CycleDecomposition{{{1, 2}, {2}}}), Error);
  CHECK_THROWS_AS(SplayForest(CycleDecomposition{{{1, 3}}}), Error);
}

TEST_CASE("splay keeps the in-order sequence") {
  SplayForest f = forest_of("(1,2,3)", 3);
  f.splay(3);
  CHECK(f.in_order(1) == Seq{1, 2, 3});
  CHECK(f.parent(3) == 0);
  const auto before = f.rotation_count();
  f.splay(3);
  CHECK(f.rotation_count() == before);

  std::vector<Element> cycle(64);
  std::iota(cycle.begin(), cycle.end(), 1);
  std::mt19937_64 rng(1);
  std::shuffle(cycle.begin() + 1, cycle.end(), rng);
  SplayForest big(CycleDecomposition{{cycle}});
  std::uniform_int_distribution<Element> pick(1, 64);
  for (int t = 0; t < 1000; ++t) {
    const Element x = pick(rng);
    big.splay(x);
    CHECK(big.parent(x) == 0);
  }
  CHECK(big.in_order(1) == cycle);
}

TEST_CASE("same-cycle test") {
  SplayForest f(cycle_decomposition(sigma_i_direct("acccbccbab", 1)));
  CHECK(f.same_cycle_as_first(1));
  CHECK_FALSE(f.same_cycle_as_first(2));
  CHECK(f.first_root() == 1);

  SplayForest g = forest_of("(1,2,7,10,3,8,11,6,4)(5,9)", 11);
  CHECK_FALSE(g.same_cycle_as_first(5));
  CHECK(g.same_cycle_as_first(6));
  CHECK(g.first_root() == 6);
}

TEST_CASE("split after the root") {
  SplayForest f = forest_of("(1,2,7,10,3,8,11,6,4,9,5)", 11);
  REQUIRE(f.same_cycle_as_first(6));
  f.split_after(6);
  CHECK(f.tree_count() == 2);
  CHECK(f.trees() == std::vector<Seq>{{1, 2, 7, 10, 3, 8, 11, 6}, {4, 9, 5}});

  SplayForest pair = forest_of("(1,2)", 2);
  REQUIRE(pair.same_cycle_as_first(1));
  pair.split_after(1);
  CHECK(pair.trees() == std::vector<Seq>{{1}, {2}});

  SplayForest last = forest_of("(1,2,3)", 3);
  REQUIRE(last.same_cycle_as_first(3));
  CHECK_THROWS_AS(last.split_after(3), Error);
  CHECK_THROWS_AS(last.split_after(2), Error);
}

TEST_CASE("merge into the first cycle") {
  SplayForest f = forest_of("(1)(2)", 2);
  REQUIRE_FALSE(f.same_cycle_as_first(2));
  f.merge_first_with(2, 1);
  CHECK(f.tree_count() == 1);
  CHECK(f.in_order(2) == Seq{1, 2});

  SplayForest g = forest_of("(1,2,7,11,6,10,3,8)(4,9,5)", 11);
  REQUIRE_FALSE(g.same_cycle_as_first(9));
  g.merge_first_with(9, 8);
  CHECK(g.in_order(1) == Seq{1, 2, 7, 11, 6, 10, 3, 8, 5, 4, 9});

  SplayForest h = forest_of("(1,3)(2,4)", 4);
  REQUIRE(h.same_cycle_as_first(3));
  CHECK_THROWS_AS(h.merge_first_with(3, 3), Error);
}

TEST_CASE("random splays across a forest") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 20; ++round) {
    std::vector<Element> v(40);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    const auto cycles = cycle_decomposition(Permutation(v));
    SplayForest f(cycles);
    const auto expected = f.trees();
    std::uniform_int_distribution<Element> pick(1, 40);
    for (int t = 0; t < 50; ++t) f.splay(pick(rng));
    CHECK(f.trees() == expected);
    CHECK(f.tree_count() == cycles.count());
  }
}

TEST_CASE("packed and wide layouts agree step by step") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    std::string w(1 + rng() % 60, 'a');
    for (char& c : w) c = static_cast<char>('a' + rng() % 3);
    const Permutation sigma_1 = sigma_i_direct(standard_permutation(w), 1);
    SplayForest packed(sigma_1, SplayForest::Layout::kPacked);
    SplayForest wide(sigma_1, SplayForest::Layout::kWide);
    SplayForest from_cycles(cycle_decomposition(sigma_1));
    CHECK(packed.packed());
    CHECK_FALSE(wide.packed());
    CHECK(packed.trees() == from_cycles.trees());
    CHECK(wide.trees() == from_cycles.trees());
    for (Element i = 1; i <= w.size(); ++i) {
      for (SplayForest* f : {&packed, &wide}) {
        if (f->same_cycle_as_first(i + 1)) {
          f->split_after(i + 1);
        } else {
          f->merge_first_with(i + 1, i);
        }
      }
      REQUIRE(packed.trees() == wide.trees());
      CHECK(packed.first_root() == wide.first_root());
    }
    CHECK(packed.rotation_count() == wide.rotation_count());
  }
}

TEST_CASE("packed layout has a size limit") {
  const Permutation big = Permutation::identity(std::size_t{1} << 21);
  CHECK_THROWS_AS(SplayForest(big, SplayForest::Layout::kPacked), Error);
  const SplayForest auto_layout(big);
  CHECK_FALSE(auto_layout.packed());
  CHECK(auto_layout.tree_count() == big.size());
  CHECK(SplayForest(Permutation::identity((std::size_t{1} << 21) - 1)).packed());
}

TEST_CASE("merge with nothing before or after the new element") {
  // (next, D): B is empty.
  SplayForest no_b = forest_of("(1,2,3)(4,5,6)", 6);
  REQUIRE_FALSE(no_b.same_cycle_as_first(4));
  no_b.merge_first_with(4, 3);
  CHECK(no_b.trees() == std::vector<Seq>{{1, 2, 3, 5, 6, 4}});

  // (B, next): D is empty.
  SplayForest no_d(CycleDecomposition{{{1, 2, 3}, {6, 5, 4}}});
  REQUIRE_FALSE(no_d.same_cycle_as_first(4));
  no_d.merge_first_with(4, 3);
  CHECK(no_d.trees() == std::vector<Seq>{{1, 2, 3, 6, 5, 4}});

  // Neither side.
  SplayForest alone = forest_of("(1,2,3)(4)", 4);
  REQUIRE_FALSE(alone.same_cycle_as_first(4));
  alone.merge_first_with(4, 3);
  CHECK(alone.trees() == std::vector<Seq>{{1, 2, 3, 4}});
}
