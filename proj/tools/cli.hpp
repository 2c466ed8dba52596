#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oclat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Returns the process exit code: 0 on
// success, 1 when a verification fails, 2 on a usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oclat::cli
