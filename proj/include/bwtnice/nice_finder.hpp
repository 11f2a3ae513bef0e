#pragma once

// Nice positions of a word: the positions i such that inserting the sentinel
// at i yields the BWT of some sentinel-terminated word, i.e. the standard
// permutation sigma_i of dol(w, i) is a single cycle.
//
// find_nice_fast runs the splay-forest sweep in O(n log n): starting from
// sigma_1 each step i -> i+1 applies one transposition, which either splits
// the cycle through 1 or merges it with the cycle holding i+1, and the cycle
// count is tracked along the way. find_nice_naive rebuilds every sigma_i in
// O(n) and walks it, O(n^2) total.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bwtnice/permutation.hpp"

namespace bwtnice {

enum class StepKind { kStart, kMerge, kSplit };

std::string_view to_string(StepKind kind);

// State after reaching sigma_i. The first record of a trace describes the
// starting permutation and has kind kStart.
struct StepRecord {
  std::size_t i = 0;
  StepKind kind = StepKind::kStart;
  std::size_t cycles = 0;
  bool nice = false;
  // Canonical cycle notation of sigma_i; filled only for detailed traces.
  std::string sigma;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct NiceReport {
  std::string word;
  std::vector<std::size_t> nice;  // ascending, 1-based
  std::optional<std::vector<StepRecord>> trace;
  std::optional<std::map<std::size_t, std::string>> preimages;
  // Splay rotations performed by the sweep; 0 for find_nice_naive.
  std::uint64_t rotations = 0;
};

class SplayForest;

struct FinderOptions {
  bool trace = false;
  // Trace records also carry sigma_i in cycle notation (O(n) per step).
  bool trace_sigma = false;
  // Re-extract the first cycle after every step and check it reads
  // (1, ..., i+1). O(n) per step; for testing.
  bool verify_invariants = false;
  // Called with (i, forest) whenever the forest holds sigma_i.
  std::function<void(std::size_t, const SplayForest&)> on_step;
};

NiceReport find_nice_fast(std::string_view w, const FinderOptions& options = {});

NiceReport find_nice_naive(std::string_view w);

// Starts the sweep at sigma_{i0} with i0 = max{L+1, 2b+c} from the bounds
// profile; positions below i0 cannot be nice and are not examined.
NiceReport find_nice_fast_start(std::string_view w,
                                const FinderOptions& options = {});

// Preimage v (sentinel stripped) with bwt(v + sentinel) == dol(w, i) for each
// position. Throws kNotNicePosition for a position that is not nice.
std::map<std::size_t, std::string> reconstruct_preimages(
    std::string_view w, const std::vector<std::size_t>& positions);

// Fills report.preimages for all reported positions.
void attach_preimages(NiceReport& report);

// When position 2 is nice its preimage is a Lyndon word. Returns nullopt if 2
// is not nice; otherwise the Lyndon test result for preimages[2]. Throws
// kInvalidState if the report carries no preimages.
std::optional<bool> lyndon_flag(const NiceReport& report);

}  // namespace bwtnice
