#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpbp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  ///< precondition, hypothesis or I/O failure
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpbp::cli
