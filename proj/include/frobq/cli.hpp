#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frobq::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kUnsupportedRegime = 2,
  kInfiniteDimensional = 3,
  kVerificationFailure = 4,
  kInternalFault = 5,
};

// Runs one command line (without the program name) and returns its exit
// code. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobq::cli
