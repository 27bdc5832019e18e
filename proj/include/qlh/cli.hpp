#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlh::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage/parse/spec error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (without the program name) and writes its output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlh::cli
