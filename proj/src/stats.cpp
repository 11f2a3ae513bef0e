#include "bwtnice/stats.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

#include "bwtnice/error.hpp"
#include "bwtnice/nice_finder.hpp"
#include "bwtnice/permutation.hpp"
#include "bwtnice/word.hpp"

namespace bwtnice {

// Defined in the generated stats_golden.cpp.
std::string_view golden_stats_csv();

std::string_view to_string(WordClass c) {
  switch (c) {
    case WordClass::kNoBwt:
      return "not a BWT image";
    case WordClass::kBwtOfPrimitive:
      return "BWT of a primitive word";
    case WordClass::kBwtOfPower:
      return "BWT of a power";
  }
  return "unknown";
}

WordClass classify(std::string_view w) {
  if (w.empty()) {
    throw Error(ErrorCode::kEmptyWord, "word must have at least one symbol");
  }
  const std::size_t cycles = cycle_count(standard_permutation(w));
  const std::size_t g = runlength_gcd(w);
  if (cycles != g) return WordClass::kNoBwt;
  return g == 1 ? WordClass::kBwtOfPrimitive : WordClass::kBwtOfPower;
}

namespace {

std::vector<StatsRow> empty_rows(std::size_t n) {
  std::vector<StatsRow> rows((n + 1) / 2 + 1);
  for (std::size_t h = 0; h < rows.size(); ++h) {
    rows[h].n = n;
    rows[h].h = h;
  }
  return rows;
}

// Words with index in [lo, hi), read as base-k numbers with the last symbol
// as least significant digit.
void count_range(std::size_t k, std::size_t n, std::uint64_t lo,
                 std::uint64_t hi, std::vector<StatsRow>& rows) {
  std::string w(n, 'a');
  std::uint64_t value = lo;
  for (std::size_t pos = n; pos-- > 0;) {
    w[pos] = static_cast<char>('a' + value % k);
    value /= k;
  }
  for (std::uint64_t index = lo; index < hi; ++index) {
    const std::size_t h = find_nice_fast(w).nice.size();
    StatsRow& row = rows.at(h);
    ++row.all;
    switch (classify(w)) {
      case WordClass::kNoBwt:
        ++row.no_bwt;
        break;
      case WordClass::kBwtOfPrimitive:
        ++row.bwt;
        ++row.prim;
        break;
      case WordClass::kBwtOfPower:
        ++row.bwt;
        ++row.pow;
        break;
    }
    for (std::size_t pos = n; pos-- > 0;) {
      if (w[pos] - 'a' + 1 < static_cast<int>(k)) {
        ++w[pos];
        break;
      }
      w[pos] = 'a';
    }
  }
}

}  // namespace

std::vector<StatsRow> enumerate_stats(std::size_t k, std::size_t n,
                                      const StatsOptions& options) {
  if (k < 1 || k > 26) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet size must be 1..26");
  }
  if (n < 1) throw Error(ErrorCode::kEmptyWord, "length must be positive");

  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (total > UINT64_MAX / k) {
      throw Error(ErrorCode::kTooLarge, "k^n does not fit in 64 bits");
    }
    total *= k;
  }
  if (!options.force && total > options.budget) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(k) + "^" + std::to_string(n) + " = " +
                    std::to_string(total) + " words exceeds the budget of " +
                    std::to_string(options.budget) + " (use --force)");
  }

  const std::size_t workers = std::clamp<std::uint64_t>(
      options.workers, 1, std::max<std::uint64_t>(1, total));
  std::vector<std::vector<StatsRow>> partial(workers, empty_rows(n));
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < workers; ++t) {
      const std::uint64_t lo = total * t / workers;
      const std::uint64_t hi = total * (t + 1) / workers;
      threads.emplace_back(
          [=, &partial] { count_range(k, n, lo, hi, partial[t]); });
    }
  }

  std::vector<StatsRow> rows = empty_rows(n);
  for (const auto& part : partial) {
    for (std::size_t h = 0; h < rows.size(); ++h) {
      rows[h].all += part[h].all;
      rows[h].no_bwt += part[h].no_bwt;
      rows[h].bwt += part[h].bwt;
      rows[h].prim += part[h].prim;
      rows[h].pow += part[h].pow;
    }
  }
  return rows;
}

void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows) {
  out << "n,h,all,noBWT,BWT,prim,pow\n";
  for (const StatsRow& r : rows) {
    out << r.n << ',' << r.h << ',' << r.all << ',' << r.no_bwt << ','
        << r.bwt << ',' << r.prim << ',' << r.pow << '\n';
  }
}

const std::vector<GoldenStatsRow>& golden_stats() {
  static const std::vector<GoldenStatsRow> rows = [] {
    std::vector<GoldenStatsRow> out;
    std::istringstream in{std::string(golden_stats_csv())};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line.front() == '#' || line.front() == 's') continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream fields(line);
      GoldenStatsRow g;
      fields >> g.sigma >> g.row.n >> g.row.h >> g.row.all >> g.row.no_bwt >>
          g.row.bwt >> g.row.prim >> g.row.pow;
      out.push_back(g);
    }
    return out;
  }();
  return rows;
}

std::vector<StatsRow> golden_stats(std::size_t k, std::size_t n) {
  std::vector<StatsRow> out;
  for (const GoldenStatsRow& g : golden_stats()) {
    if (g.sigma == k && g.row.n == n) out.push_back(g.row);
  }
  return out;
}

std::vector<std::string> diff_stats(const std::vector<StatsRow>& computed,
                                    const std::vector<StatsRow>& published) {
  std::vector<std::string> diffs;
  auto find_h = [](const std::vector<StatsRow>& rows, std::size_t h) {
    return std::find_if(rows.begin(), rows.end(),
                        [h](const StatsRow& r) { return r.h == h; });
  };
  auto show = [](const StatsRow& r) {
    std::ostringstream s;
    s << r.all << '/' << r.no_bwt << '/' << r.bwt << '/' << r.prim << '/'
      << r.pow;
    return s.str();
  };
  for (const StatsRow& c : computed) {
    const auto p = find_h(published, c.h);
    if (p == published.end()) {
      if (c.all != 0) {
        diffs.push_back("h=" + std::to_string(c.h) + ": computed " + show(c) +
                        ", not published");
      }
    } else if (!(*p == c)) {
      diffs.push_back("h=" + std::to_string(c.h) + ": computed " + show(c) +
                      ", published " + show(*p));
    }
  }
  for (const StatsRow& p : published) {
    if (find_h(computed, p.h) == computed.end()) {
      diffs.push_back("h=" + std::to_string(p.h) + ": published " + show(p) +
                      ", not computed");
    }
  }
  return diffs;
}

}  // namespace bwtnice
