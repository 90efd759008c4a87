#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reglab::cli {

inline constexpr int kOk = 0;
inline constexpr int kViolated = 1;
inline constexpr int kUsage = 2;

/// Runs one subcommand (args exclude the program name). Writes a single JSON
/// document to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reglab::cli
