#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow4 {

// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// The `rainbow4` command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rainbow4
