#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deviant::cli {

/// Exit codes: 0 success, 1 bad input data, 2 bad configuration or usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitConfig = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deviant::cli
