#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace faberkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// Environment variable holding the default --precision.
inline constexpr const char* kPrecisionEnv = "FABERKIT_PRECISION";

// Runs one command line (args excludes the program name). JSON or CSV goes
// to `out` on success only; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faberkit::cli
