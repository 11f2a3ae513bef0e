#pragma once

// Exhaustive statistics over all words of length n on the alphabet
// {'a', 'a'+1, ..., 'a'+k-1}: how many words have h nice positions, split
// into non-images, images of primitive words and images of proper powers.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bwtnice {

enum class WordClass { kNoBwt, kBwtOfPrimitive, kBwtOfPower };

std::string_view to_string(WordClass c);

// kNoBwt when cycles != gcd(run-lengths); otherwise primitive when the gcd
// is 1 and a power when it is larger.
WordClass classify(std::string_view w);

struct StatsRow {
  std::size_t n = 0;
  std::size_t h = 0;
  std::uint64_t all = 0;
  std::uint64_t no_bwt = 0;
  std::uint64_t bwt = 0;
  std::uint64_t prim = 0;
  std::uint64_t pow = 0;

  friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

inline constexpr std::uint64_t kDefaultStatsBudget = 100'000'000;

struct StatsOptions {
  std::size_t workers = 1;
  std::uint64_t budget = kDefaultStatsBudget;
  bool force = false;  // ignore the budget
};

// Rows for h = 0..floor((n+1)/2), including empty ones. Throws kTooLarge when
// k^n exceeds the budget and force is not set. The result does not depend on
// the worker count.
std::vector<StatsRow> enumerate_stats(std::size_t k, std::size_t n,
                                      const StatsOptions& options = {});

// CSV with header n,h,all,noBWT,BWT,prim,pow.
void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows);

struct GoldenStatsRow {
  std::size_t sigma = 0;
  StatsRow row;
};

// Published rows for |Sigma| in {2, 3}, n = 3..20, compiled into the library.
const std::vector<GoldenStatsRow>& golden_stats();

// Published rows for one (k, n) table, in h order. Empty if not published.
std::vector<StatsRow> golden_stats(std::size_t k, std::size_t n);

// Human-readable differences between computed and published rows; empty when
// they agree exactly. Rows with all == 0 on the computed side are ignored if
// the published table omits them.
std::vector<std::string> diff_stats(const std::vector<StatsRow>& computed,
                                    const std::vector<StatsRow>& published);

}  // namespace bwtnice
