#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsens::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUser = 1;
inline constexpr int kExitInternal = 2;

inline constexpr const char* kToolVersion = "0.1.0";

// Entry point shared by the `hsens` executable and the tests. `args` holds
// the subcommand and its flags, without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsens::cli
