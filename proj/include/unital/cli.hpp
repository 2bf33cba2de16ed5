#pragma once

// The `unital` command line: construction, verification, search and
// reporting. Exit codes: 0 all checks passed, 1 a verification failed,
// 2 usage, input or resource error.

#include <iosfwd>
#include <string>
#include <vector>

namespace unital {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace unital
