#include <doctest.h>

#include <algorithm>
#include <string>

#include "bwtnice/error.hpp"
#include "bwtnice/word.hpp"
#include "oracle/oracle.hpp"

using namespace bwtnice;
using namespace std::string_literals;

namespace {

// Printable '$' -> internal sentinel.
std::string S(std::string text) {
  for (char& ch : text) {
    if (ch == '$') ch = kSentinel;
  }
  return text;
}

}  // namespace

TEST_CASE("rotations") {
  CHECK(rotations("ab") == std::vector<std::string>{"ab", "ba"});
  CHECK(rotations("aaa") == std::vector<std::string>{"aaa", "aaa", "aaa"});
  const auto r = rotations(S("nanana$"));
  REQUIRE(r.size() == 7);
  CHECK(std::find(r.begin(), r.end(), S("$nanana")) != r.end());
  CHECK_THROWS_AS(rotations(""), Error);
}

TEST_CASE("bwt of small words") {
  CHECK(bwt("banana") == "nnbaaa");
  CHECK(bwt("nanana") == "nnnaaa");
  CHECK(bwt(S("nanana$")) == S("annnaa$"));
  CHECK_THROWS_AS(bwt(""), Error);
}

TEST_CASE("bwt agrees with the rotation matrix oracle") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::string v = oracle::random_word(rng, 1 + t % 40, 1 + t % 5);
    CHECK(bwt(v) == oracle::bwt_by_matrix(v));
    CHECK(bwt(v + kSentinel) == oracle::bwt_by_matrix(v + kSentinel));
  }
}

TEST_CASE("inverse bwt with one sentinel") {
  CHECK(inverse_bwt_sentinel(S("annnaa$")) == "nanana");
  CHECK(inverse_bwt_sentinel(S("an$nnaa")) == "ananna");
  try {
    inverse_bwt_sentinel(S("ba$nana"));
    FAIL("expected NotABwtImage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotABwtImage);
  }
  CHECK(oracle::preimages_by_search(S("ba$nana")).empty());
  try {
    inverse_bwt_sentinel("abc");
    FAIL("expected BadSentinelCount");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBadSentinelCount);
  }
  CHECK_THROWS_AS(inverse_bwt_sentinel(S("a$$")), Error);
}

TEST_CASE("image test") {
  CHECK(is_bwt_image("nnbaaa"));
  CHECK_FALSE(is_bwt_image("banana"));
  CHECK(is_bwt_image("ccaaaaaabb"));
  CHECK(bwt("aaabcaaabc") == "ccaaaaaabb");
}

TEST_CASE("image test agrees with exhaustive search") {
  for (std::size_t n = 1; n <= 6; ++n) {
    oracle::for_each_word(3, n, [](const std::string& w) {
      CHECK(is_bwt_image(w) == oracle::is_bwt_image_by_search(w));
    });
  }
}

TEST_CASE("run-lengths") {
  CHECK(runlengths("nnbaaa") == std::vector<std::size_t>{2, 1, 3});
  CHECK(runlength_gcd("nnbaaa") == 1);
  CHECK(runlengths("ccaaaaaabb") == std::vector<std::size_t>{2, 6, 2});
  CHECK(runlength_gcd("ccaaaaaabb") == 2);
  CHECK(runlength_gcd("aaaa") == 4);
}

TEST_CASE("primitive and Lyndon") {
  CHECK(is_primitive("ab"));
  CHECK_FALSE(is_primitive("abab"));
  CHECK(is_lyndon("aaab"));
  CHECK_FALSE(is_lyndon("aa"));
  CHECK_FALSE(is_lyndon("ba"));
  for (std::size_t n = 1; n <= 8; ++n) {
    oracle::for_each_word(2, n, [](const std::string& v) {
      CHECK(is_lyndon(v) == oracle::is_lyndon_by_suffixes(v));
      CHECK(is_primitive(v) == (oracle::primitive_root_length(v) == v.size()));
    });
  }
}

TEST_CASE("dol") {
  CHECK(dol("annnaa", 3) == S("an$nnaa"));
  CHECK(dol("annnaa", 7) == S("annnaa$"));
  CHECK(dol("x", 1) == S("$x"));
  CHECK_THROWS_AS(dol("x", 0), Error);
  CHECK_THROWS_AS(dol("x", 3), Error);
}

TEST_CASE("sentinel sorts below every byte") {
  CHECK(bwt(S("\xff\x01$")) == S("\x01\xff$"));
  CHECK(bwt("\xff\x01") == oracle::bwt_by_matrix("\xff\x01"));
}
