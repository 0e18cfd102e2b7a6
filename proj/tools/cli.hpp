#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace khov::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kTooLarge = 2;
constexpr int kInternal = 3;

// Runs the command line with data on `out` and diagnostics on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace khov::cli
