#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coarse/number.hpp"

namespace coarse::cli {

// Exit codes.
inline constexpr int kOk = 0;          // success / inert
inline constexpr int kError = 1;       // invalid input or computation error
inline constexpr int kUsage = 2;       // bad flags
inline constexpr int kNoVerdict = 3;   // inert: no stable suffix found

// Runs the `coarse` command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

// One rational per line; blank lines and '#' comments are skipped.
// Throws ParseError with the 1-based line number.
std::vector<Number> read_numbers(std::istream& in);

}  // namespace coarse::cli
