#pragma once

// Text and JSON renderings shared by the command-line tool. Words are kept
// with the internal 0x00 sentinel; rendering swaps in the printable sentinel
// character.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bwtnice/bounds.hpp"
#include "bwtnice/nice_finder.hpp"
#include "bwtnice/pseudo_cycle.hpp"

namespace bwtnice {

// Maps the printable sentinel to 0x00. Throws kInvalidArgument on raw 0x00
// bytes in the input.
std::string from_external(std::string_view text, char sentinel);

// Maps 0x00 back to the printable sentinel.
std::string to_external(std::string_view word, char sentinel);

// "3 7"
std::string join_positions(const std::vector<std::size_t>& positions);

// {"word":..., "nice":[...], "preimages":{...}?, "trace":[...]?}
nlohmann::json report_to_json(const NiceReport& report, char sentinel);

// Positions on the first line; with preimages, one "dol(w,i)  v$  i" line per
// nice position, like the rows of the published tables.
std::string report_to_text(const NiceReport& report, char sentinel);

// One line per sigma_i: position, merge/split tag, cycle count, nice marker
// and (when recorded) the cycle notation of sigma_i.
std::string trace_to_text(const NiceReport& report);

nlohmann::json bounds_to_json(const BoundsProfile& profile);
std::string bounds_to_text(const BoundsProfile& profile);

std::string set_to_text(const ElementSet& s);

}  // namespace bwtnice
