#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ptorus/verify.hpp"

namespace ptorus::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kInvalidInput = 2,
  kOverflow = 3,
};

/// Runs the command line (without the program name) and returns the exit
/// code. Output goes to `out` unless --out is given; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const VerifyHooks& hooks = {});

}  // namespace ptorus::cli
