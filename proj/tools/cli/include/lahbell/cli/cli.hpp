#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lahbell::cli {

// Exit codes of the lahbell executable.
enum ExitCode : int {
  kExitOk = 0,
  kExitIdentityFailure = 1,
  kExitUsage = 2,
  kExitCapExceeded = 3,
  kExitEvaluationDomain = 4,
  kExitSignedMass = 5,
};

inline constexpr unsigned kDefaultCap = 200;

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lahbell::cli
