#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 mathematical
// failure or counterexample, 2 usage or budget error.

#include <ostream>
#include <string>
#include <vector>

namespace overpart::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace overpart::cli
