#pragma once

#include <iosfwd>

namespace bwtnice {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Entry point of the `bwtnice` tool with injectable streams. `in` supplies
// the word when neither a positional word nor --file is given.
int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace bwtnice
