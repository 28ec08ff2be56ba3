#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kconj {

/// Exit codes: 0 success, 1 bad input, 2 verification failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerify = 2;

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kconj
