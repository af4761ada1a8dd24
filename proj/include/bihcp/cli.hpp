#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bihcp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Parses argv (argv[0] is the program name), writes the report to `out` and
/// diagnostics to `err`, and returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bihcp::cli
