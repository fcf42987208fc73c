#pragma once

// Command-line front end. run() is the whole program minus process setup so
// that tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace fano212 {

enum ExitCode : int {
  kExitOk = 0,
  kExitMathFailure = 1,
  kExitInvalidInput = 2,
  kExitInconclusive = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fano212
