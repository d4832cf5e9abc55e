#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carand::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kBatteryIncomplete = 3,
};

/// Entry point of the `carand` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience form; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace carand::cli
