#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradelie::cli {

/// Exit codes: 0 when every check passes, 1 when a violation or
/// counterexample is found, 2 for malformed input or arguments.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradelie::cli
