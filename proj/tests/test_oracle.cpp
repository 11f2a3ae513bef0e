#include <doctest.h>

#include <random>

#include "bwtnice/nice_finder.hpp"
#include "bwtnice/permutation.hpp"
#include "bwtnice/word.hpp"
#include "oracle/corpus.hpp"
#include "oracle/oracle.hpp"

using namespace bwtnice;

namespace {

using Positions = std::vector<std::size_t>;

std::string printable(std::string s) {
  for (char& ch : s) {
    if (ch == kSentinel) ch = '$';
  }
  return s;
}

}  // namespace

TEST_CASE("oracle nice positions on known words") {
  CHECK(oracle::nice_positions("acccbccbab") == Positions{5, 9});
  CHECK(oracle::nice_positions("bbaababbbabbabaaaa") ==
        Positions{2, 4, 6, 8, 10, 12, 14, 16, 18});
  CHECK(oracle::nice_positions("babbabbababaaab").empty());
}

TEST_CASE("corpus shape") {
  const auto& corpus = oracle::golden_corpus();
  std::size_t short_words = 0, long_words = 0;
  for (const auto& e : corpus) {
    (e.source.rfind("long.", 0) == 0 ? long_words : short_words)++;
  }
  CHECK(short_words == 4 + 8 + 16 + 32);
  CHECK(long_words == 25);
  for (std::size_t n = 2; n <= 5; ++n) {
    std::size_t count = 0;
    oracle::for_each_word(2, n, [&](const std::string& w) {
      for (const auto& e : corpus) count += e.word == w;
    });
    CHECK(count == (std::size_t{1} << n));
  }
}

TEST_CASE("every corpus row end to end") {
  for (const auto& e : oracle::golden_corpus()) {
    CAPTURE(e.source);
    CAPTURE(e.word);
    const std::string sigma = cycle_decomposition(standard_permutation(e.word)).to_string();
    if (e.sigma.typo) {
      CHECK(sigma != e.sigma.text);
    } else {
      CHECK(sigma == e.sigma.text);
    }
    CHECK((e.h == e.nice.size()) != e.h_typo);
    CHECK(oracle::nice_positions(e.word) == e.nice);
    const NiceReport r = find_nice_fast(e.word);
    CHECK(r.nice == e.nice);
    const auto pre = reconstruct_preimages(e.word, r.nice);
    for (const auto& [i, v] : pre) {
      CHECK(bwt(v + kSentinel) == dol(e.word, i));
      if (e.word.size() <= 8) {
        CHECK(oracle::preimages_by_search(dol(e.word, i)) == std::vector<std::string>{v});
      }
    }
    for (const auto& [i, printed] : e.preimages) {
      const std::string computed = printable(pre.at(i) + kSentinel);
      if (printed.typo) {
        CHECK(computed != printed.text);
      } else {
        CHECK(computed == printed.text);
      }
    }
  }
}

TEST_CASE("quarantined cells are recomputed") {
  CHECK(cycle_decomposition(standard_permutation("babba")).to_string() == "(1,3,4,5,2)");
  CHECK(oracle::nice_positions("babba") == Positions{2});
  const std::string image = dol("bbaba", 5);
  CHECK(inverse_bwt_sentinel(image) == "baabb");
  CHECK(oracle::preimages_by_search(image) == std::vector<std::string>{"baabb"});
  CHECK(oracle::nice_positions("bba").size() == 2);
}

TEST_CASE("random words against the oracle") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 10000; ++t) {
    const std::string w = oracle::random_word(rng, 1 + t % 40, 1 + t % 6);
    CHECK(find_nice_fast(w).nice == oracle::nice_positions(w));
  }
}
