#include "bwtnice/nice_finder.hpp"

#include <algorithm>

#include "bwtnice/bounds.hpp"
#include "bwtnice/error.hpp"
#include "bwtnice/splay_forest.hpp"
#include "bwtnice/word.hpp"

namespace bwtnice {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::kStart:
      return "start";
    case StepKind::kMerge:
      return "merge";
    case StepKind::kSplit:
      return "split";
  }
  return "unknown";
}

namespace {

constexpr unsigned kPrefetchAhead = 5;

void validate_word(std::string_view w) {
  if (w.empty()) {
    throw Error(ErrorCode::kEmptyWord, "word must have at least one symbol");
  }
  require_sentinel_free(w);
}

// Sweeps sigma_start = sigma_{start_i} forward to sigma_{n+1}, appending
// every i with a cyclic sigma_i to report.nice.
void sweep(const Permutation& sigma_start, std::size_t start_i,
           const FinderOptions& options, NiceReport& report) {
  const std::size_t last_position = sigma_start.size();  // n + 1
  SplayForest forest(sigma_start);
  std::size_t cycles = forest.tree_count();

  // One-line copy of sigma_i, only kept up to date when it is printed.
  std::vector<Element> current;
  auto sigma_text = [&]() -> std::string {
    if (!options.trace_sigma) return {};
    return cycle_decomposition(Permutation(current)).to_string();
  };
  if (options.trace_sigma) {
    current.assign(sigma_start.one_line().begin(),
                   sigma_start.one_line().end());
  }

  if (options.trace) report.trace.emplace();
  auto record = [&](std::size_t i, StepKind kind) {
    if (cycles == 1) report.nice.push_back(i);
    if (options.on_step) options.on_step(i, forest);
    if (report.trace) {
      report.trace->push_back({i, kind, cycles, cycles == 1, sigma_text()});
    }
  };
  record(start_i, StepKind::kStart);

  for (std::size_t i = start_i; i < last_position; ++i) {
    const auto next = static_cast<Element>(i + 1);
    // Element i+1+a gets its ancestor at depth kPrefetchAhead-a warmed, so
    // every hint starts from a node fetched on an earlier step.
    if (i + kPrefetchAhead <= last_position) {
      for (unsigned d = 1; d < kPrefetchAhead; ++d) {
        forest.prefetch_ancestor(static_cast<Element>(i + 1 + kPrefetchAhead - d), d);
      }
    }
    StepKind kind;
    if (forest.same_cycle_as_first(next)) {
      forest.split_after(next);
      ++cycles;
      kind = StepKind::kSplit;
    } else {
      forest.merge_first_with(next, static_cast<Element>(i));
      --cycles;
      kind = StepKind::kMerge;
    }
    if (options.trace_sigma) {
      current[i - 1] = current[i];
      current[i] = 1;
    }
    if (options.verify_invariants) {
      const std::vector<Element> first = forest.in_order(1);
      if (first.front() != 1 || first.back() != next ||
          forest.tree_count() != cycles) {
        throw Error(ErrorCode::kInvalidState,
                    "first cycle does not read (1, ..., " +
                        std::to_string(next) + ") after step " +
                        std::to_string(i));
      }
    }
    record(next, kind);
  }
  report.rotations = forest.rotation_count();
}

}  // namespace

NiceReport find_nice_fast(std::string_view w, const FinderOptions& options) {
  validate_word(w);
  NiceReport report;
  report.word = std::string(w);
  const Permutation sigma_1 = sigma_i_direct(standard_permutation(w), 1);
  sweep(sigma_1, 1, options, report);
  return report;
}

NiceReport find_nice_fast_start(std::string_view w,
                                const FinderOptions& options) {
  validate_word(w);
  NiceReport report;
  report.word = std::string(w);
  const Permutation sigma_w = standard_permutation(w);
  const BoundsProfile profile = bounds_profile(sigma_w);
  if (profile.i0 > w.size() + 1) {
    if (options.trace) report.trace.emplace();
    return report;
  }
  sweep(sigma_i_direct(sigma_w, profile.i0), profile.i0, options, report);
  return report;
}

NiceReport find_nice_naive(std::string_view w) {
  validate_word(w);
  NiceReport report;
  report.word = std::string(w);
  for (std::size_t i = 1; i <= w.size() + 1; ++i) {
    if (is_cyclic(standard_permutation(dol(w, i)))) report.nice.push_back(i);
  }
  return report;
}

std::map<std::size_t, std::string> reconstruct_preimages(
    std::string_view w, const std::vector<std::size_t>& positions) {
  validate_word(w);
  std::map<std::size_t, std::string> out;
  for (std::size_t i : positions) {
    const std::string image = dol(w, i);
    try {
      out.emplace(i, inverse_bwt_sentinel(image));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotABwtImage) throw;
      throw Error(ErrorCode::kNotNicePosition,
                  "position " + std::to_string(i) + " is not nice");
    }
  }
  return out;
}

void attach_preimages(NiceReport& report) {
  report.preimages = reconstruct_preimages(report.word, report.nice);
}

std::optional<bool> lyndon_flag(const NiceReport& report) {
  if (!report.preimages) {
    throw Error(ErrorCode::kInvalidState, "report carries no preimages");
  }
  const auto it = report.preimages->find(2);
  if (it == report.preimages->end()) return std::nullopt;
  return is_lyndon(it->second);
}

}  // namespace bwtnice
