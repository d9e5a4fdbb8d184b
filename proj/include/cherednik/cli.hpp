#pragma once

// Command-line front end. run() parses the arguments (without the program
// name), writes the report to out and diagnostics to err, and returns the
// exit status: 0 success, 1 usage or parse error, 2 integrity failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace cherednik::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIntegrity = 2;

// Environment variable consulted for the cutoff when --cutoff is absent.
inline constexpr const char* kCutoffVariable = "CHEREDNIK_CUTOFF";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherednik::cli
