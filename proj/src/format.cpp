#include "bwtnice/format.hpp"

#include <iomanip>
#include <sstream>

#include "bwtnice/error.hpp"
#include "bwtnice/word.hpp"

namespace bwtnice {

std::string from_external(std::string_view text, char sentinel) {
  if (text.find(kSentinel) != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "input contains a raw 0x00 byte, which is reserved");
  }
  std::string out(text);
  for (char& ch : out) {
    if (ch == sentinel) ch = kSentinel;
  }
  return out;
}

std::string to_external(std::string_view word, char sentinel) {
  std::string out(word);
  for (char& ch : out) {
    if (ch == kSentinel) ch = sentinel;
  }
  return out;
}

std::string join_positions(const std::vector<std::size_t>& positions) {
  std::string out;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k > 0) out.push_back(' ');
    out.append(std::to_string(positions[k]));
  }
  return out;
}

nlohmann::json report_to_json(const NiceReport& report, char sentinel) {
  nlohmann::json j;
  j["word"] = to_external(report.word, sentinel);
  j["nice"] = report.nice;
  if (report.preimages) {
    nlohmann::json pre = nlohmann::json::object();
    for (const auto& [i, v] : *report.preimages) {
      pre[std::to_string(i)] = to_external(v, sentinel);
    }
    j["preimages"] = std::move(pre);
  }
  if (report.trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const StepRecord& s : *report.trace) {
      nlohmann::json step{{"i", s.i},
                          {"kind", to_string(s.kind)},
                          {"cycles", s.cycles},
                          {"nice", s.nice}};
      if (!s.sigma.empty()) step["sigma"] = s.sigma;
      steps.push_back(std::move(step));
    }
    j["trace"] = std::move(steps);
  }
  return j;
}

std::string report_to_text(const NiceReport& report, char sentinel) {
  std::string out = join_positions(report.nice);
  out.push_back('\n');
  if (report.preimages) {
    for (const auto& [i, v] : *report.preimages) {
      out += to_external(dol(report.word, i), sentinel) + "  " +
             to_external(v, sentinel) + sentinel + "  " + std::to_string(i) +
             "\n";
    }
  }
  return out;
}

std::string trace_to_text(const NiceReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "i" << std::setw(7) << "step"
      << std::setw(8) << "cycles" << std::setw(6) << "nice" << "sigma_i\n";
  if (!report.trace) return out.str();
  for (const StepRecord& s : *report.trace) {
    out << std::left << std::setw(6) << s.i << std::setw(7)
        << (s.kind == StepKind::kStart ? "-" : std::string(to_string(s.kind)))
        << std::setw(8) << s.cycles << std::setw(6) << (s.nice ? "[*]" : "")
        << s.sigma << '\n';
  }
  return out.str();
}

nlohmann::json bounds_to_json(const BoundsProfile& p) {
  return {{"n", p.n},
          {"c", p.c},
          {"L", p.L},
          {"b", p.b},
          {"i0", p.i0},
          {"parity", p.parity == Parity::kEven ? "even" : "odd"},
          {"h_max", p.h_max},
          {"h_max_parity", p.h_max_parity},
          {"h_max_L", p.h_max_l}};
}

std::string bounds_to_text(const BoundsProfile& p) {
  std::ostringstream out;
  auto row = [&](std::string_view label, const std::string& value) {
    out << std::left << std::setw(36) << label << value << '\n';
  };
  row("length n", std::to_string(p.n));
  row("cycles of sigma_w (c)", std::to_string(p.c));
  row("largest cycle minimum (L)", std::to_string(p.L));
  row("bad pairs (b)", std::to_string(p.b));
  row("first candidate max{L+1, 2b+c}", std::to_string(p.i0));
  row("parity of nice positions", p.parity == Parity::kEven ? "even" : "odd");
  row("h bound floor((n+1)/2)", std::to_string(p.h_max_parity));
  row("h bound ceil((n-L+1)/2)", std::to_string(p.h_max_l));
  row("h bound", std::to_string(p.h_max));
  return out.str();
}

std::string set_to_text(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) out.push_back(',');
    out.append(std::to_string(s[k]));
  }
  out.push_back('}');
  return out;
}

}  // namespace bwtnice
