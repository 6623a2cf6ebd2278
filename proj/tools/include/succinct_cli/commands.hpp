#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace succinct::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

// Runs the harness with argv-style arguments (without the program name).
// Returns the process exit code.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace succinct::cli
