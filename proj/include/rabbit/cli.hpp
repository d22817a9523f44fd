#pragma once

// Command-line front end. Results go to `out`; traces, timings and error
// messages go to `err`.
//
// Exit codes: 0 success, 1 usage or parse error, 2 internal inconsistency
// (including a failed cross-check or acceptance criterion).

#include <ostream>
#include <string>
#include <vector>

namespace rabbit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconsistent = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rabbit
