#include "bwtnice/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "bwtnice/bounds.hpp"
#include "bwtnice/error.hpp"
#include "bwtnice/format.hpp"
#include "bwtnice/nice_finder.hpp"
#include "bwtnice/pseudo_cycle.hpp"
#include "bwtnice/stats.hpp"
#include "bwtnice/word.hpp"

namespace bwtnice {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WordArgs {
  std::string word;
  std::string file;
};

struct GlobalArgs {
  bool json = false;
  std::string sentinel = "$";
};

void add_word_args(CLI::App* sub, WordArgs& args) {
  sub->add_option("word", args.word,
                  "Input word (bytes); read from --file or stdin if omitted");
  sub->add_option("--file", args.file, "Read the word from a file");
}

std::string strip_newline(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string read_raw_word(const CLI::App* sub, const WordArgs& args,
                          std::istream& in) {
  const bool positional = sub->count("word") > 0;
  const bool from_file = sub->count("--file") > 0;
  if (positional && from_file) {
    throw UsageError("give the word either as an argument or with --file");
  }
  if (positional) return args.word;
  if (from_file) {
    std::ifstream f(args.file, std::ios::binary);
    if (!f) throw UsageError("cannot read " + args.file);
    return strip_newline(std::string(std::istreambuf_iterator<char>(f), {}));
  }
  return strip_newline(std::string(std::istreambuf_iterator<char>(in), {}));
}

char sentinel_char(const GlobalArgs& g) {
  if (g.sentinel.size() != 1) {
    throw UsageError("--sentinel takes exactly one character");
  }
  return g.sentinel.front();
}

// Word for operations that take no sentinel.
std::string plain_word(const CLI::App* sub, const WordArgs& args,
                       const GlobalArgs& g, std::istream& in) {
  std::string w = from_external(read_raw_word(sub, args, in), sentinel_char(g));
  if (w.empty()) {
    throw Error(ErrorCode::kEmptyWord, "word must have at least one symbol");
  }
  if (sentinel_count(w) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "the sentinel '" + g.sentinel +
                    "' is reserved and cannot appear in this word");
  }
  return w;
}

void emit_json(std::ostream& out, const nlohmann::json& j) {
  out << j.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Sentinel positions that turn a word into a BWT image",
               "bwtnice"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalArgs g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--sentinel", g.sentinel,
                 "Printable character standing for the sentinel")
      ->capture_default_str();

  WordArgs nice_args;
  bool naive = false;
  bool fast_start = false;
  bool with_preimages = false;
  auto* nice = app.add_subcommand("nice", "List the nice positions of a word");
  add_word_args(nice, nice_args);
  nice->add_flag("--naive", naive, "Use the quadratic reference algorithm");
  nice->add_flag("--fast-start", fast_start,
                 "Skip positions excluded by the lower bound");
  nice->add_flag("--preimages", with_preimages,
                 "Also print the preimage for every nice position");

  WordArgs trace_args;
  auto* trace =
      app.add_subcommand("trace", "Step-by-step merge/split table of sigma_i");
  add_word_args(trace, trace_args);

  WordArgs bwt_args;
  auto* bwt_cmd = app.add_subcommand(
      "bwt", "Burrows-Wheeler transform (sentinel allowed at the end only)");
  add_word_args(bwt_cmd, bwt_args);

  WordArgs unbwt_args;
  auto* unbwt = app.add_subcommand(
      "unbwt", "Invert a BWT image that contains exactly one sentinel");
  add_word_args(unbwt, unbwt_args);

  WordArgs check_args;
  auto* check = app.add_subcommand(
      "check", "Classify a word as non-image, BWT of a primitive word or power");
  add_word_args(check, check_args);

  WordArgs pseudo_args;
  std::size_t cap = kDefaultPseudoCycleCap;
  auto* pseudo = app.add_subcommand(
      "pseudo", "Enumerate pseudo-cycles and their critical intervals");
  add_word_args(pseudo, pseudo_args);
  pseudo->add_option("--cap", cap, "Largest word length to enumerate")
      ->capture_default_str();

  WordArgs bounds_args;
  auto* bounds = app.add_subcommand(
      "bounds", "Parity, lower bound and count bounds for nice positions");
  add_word_args(bounds, bounds_args);

  std::size_t sigma = 2;
  std::size_t length = 0;
  std::string out_file;
  StatsOptions stats_options;
  bool paper_check = false;
  auto* stats = app.add_subcommand(
      "stats", "Histogram of nice-position counts over all words");
  stats->add_option("--sigma", sigma, "Alphabet size")->required();
  stats->add_option("--len", length, "Word length")->required();
  stats->add_option("--out", out_file, "Write CSV to this file");
  stats->add_option("--workers", stats_options.workers, "Worker threads")
      ->capture_default_str();
  stats->add_option("--budget", stats_options.budget,
                    "Largest number of words to enumerate without --force")
      ->capture_default_str();
  stats->add_flag("--force", stats_options.force, "Ignore the budget");
  stats->add_flag("--paper-check", paper_check,
                  "Compare against the published tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    const char s = sentinel_char(g);

    if (nice->parsed()) {
      const std::string w = plain_word(nice, nice_args, g, in);
      if (naive && fast_start) {
        throw UsageError("--naive and --fast-start are exclusive");
      }
      NiceReport report = naive        ? find_nice_naive(w)
                           : fast_start ? find_nice_fast_start(w)
                                        : find_nice_fast(w);
      if (with_preimages) attach_preimages(report);
      if (g.json) {
        emit_json(out, report_to_json(report, s));
      } else {
        out << report_to_text(report, s);
      }
    } else if (trace->parsed()) {
      const std::string w = plain_word(trace, trace_args, g, in);
      FinderOptions options;
      options.trace = true;
      options.trace_sigma = true;
      const NiceReport report = find_nice_fast(w, options);
      if (g.json) {
        emit_json(out, report_to_json(report, s));
      } else {
        out << "w = " << to_external(w, s)
            << "    sigma_w = " << cycle_decomposition(standard_permutation(w)).to_string()
            << '\n'
            << trace_to_text(report);
      }
    } else if (bwt_cmd->parsed()) {
      const std::string v = from_external(read_raw_word(bwt_cmd, bwt_args, in), s);
      const std::size_t sentinels = sentinel_count(v);
      if (sentinels > 1 || (sentinels == 1 && v.back() != kSentinel)) {
        throw Error(ErrorCode::kBadSentinelCount,
                    "the sentinel may only appear once, at the end");
      }
      const std::string image = to_external(bwt(v), s);
      if (g.json) {
        emit_json(out, {{"word", to_external(v, s)}, {"bwt", image}});
      } else {
        out << image << '\n';
      }
    } else if (unbwt->parsed()) {
      const std::string w = from_external(read_raw_word(unbwt, unbwt_args, in), s);
      const std::string v = inverse_bwt_sentinel(w);
      if (g.json) {
        emit_json(out, {{"word", to_external(w, s)}, {"preimage", v}});
      } else {
        out << v << '\n';
      }
    } else if (check->parsed()) {
      const std::string w = plain_word(check, check_args, g, in);
      const WordClass c = classify(w);
      if (g.json) {
        static constexpr const char* kNames[] = {"no_bwt", "primitive",
                                                 "power"};
        emit_json(out, {{"word", w},
                        {"class", kNames[static_cast<int>(c)]},
                        {"image", c != WordClass::kNoBwt},
                        {"runlength_gcd", runlength_gcd(w)}});
      } else {
        out << to_string(c) << '\n';
      }
    } else if (pseudo->parsed()) {
      const std::string w = plain_word(pseudo, pseudo_args, g, in);
      const auto cycles = enumerate_pseudo_cycles(standard_permutation(w), cap);
      const auto uncovered = nice_by_characterization(w, cap);
      if (g.json) {
        nlohmann::json list = nlohmann::json::array();
        for (const PseudoCycle& pc : cycles) {
          list.push_back({{"left", pc.left},
                          {"right", pc.right},
                          {"R", {pc.a + 1, pc.b}}});
        }
        emit_json(out, {{"word", w},
                        {"pseudo_cycles", std::move(list)},
                        {"uncovered", uncovered}});
      } else {
        for (const PseudoCycle& pc : cycles) {
          out << set_to_text(pc.left) << " | " << set_to_text(pc.right)
              << "  R=[" << pc.a + 1 << ',' << pc.b << "]\n";
        }
        out << "uncovered: " << join_positions(uncovered) << '\n';
      }
    } else if (bounds->parsed()) {
      const std::string w = plain_word(bounds, bounds_args, g, in);
      const BoundsProfile profile = bounds_profile(w);
      if (g.json) {
        emit_json(out, bounds_to_json(profile));
      } else {
        out << bounds_to_text(profile);
      }
    } else if (stats->parsed()) {
      const auto rows = enumerate_stats(sigma, length, stats_options);
      if (out_file.empty()) {
        write_stats_csv(out, rows);
      } else {
        std::ofstream f(out_file);
        if (!f) throw UsageError("cannot write " + out_file);
        write_stats_csv(f, rows);
      }
      if (paper_check) {
        const auto published = golden_stats(sigma, length);
        if (published.empty()) {
          err << "check: no published counts for sigma=" << sigma
              << " n=" << length << '\n';
          return kExitDomainError;
        }
        const auto diffs = diff_stats(rows, published);
        for (const auto& d : diffs) err << "check: " << d << '\n';
        if (!diffs.empty()) return kExitDomainError;
        err << "check: matches published counts\n";
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    if (g.json) {
      emit_json(out, {{"error", e.what()}, {"code", to_string(e.code())}});
    } else {
      err << "error: " << e.what() << '\n';
    }
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace bwtnice
