#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kempe::cli {

// Exit codes.
inline constexpr int kVerified = 0;
inline constexpr int kFalse = 1;
inline constexpr int kMalformed = 2;
inline constexpr int kBudget = 3;

/// Runs one command. args excludes the program name. `in` stands in for
/// standard input (input path "-" or no path).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kempe::cli
