#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz::cli {

enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kParseError = 2,
  kUnknown = 3,
  kForbidden = 4,
  kEngineDefect = 5,
  kOutOfBounds = 6,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
