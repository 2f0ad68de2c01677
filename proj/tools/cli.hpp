#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace onerel::cli {

// Exit codes shared by every subcommand.
inline constexpr int kSuccess = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kPrecondition = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace onerel::cli
