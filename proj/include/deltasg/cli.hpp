#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltasg::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kUnsupported = 3,
  kMismatch = 4,
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltasg::cli
