#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace artin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNonIsomorphic = 2;

/// Runs one command line (args excludes the program name).
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace artin::cli
