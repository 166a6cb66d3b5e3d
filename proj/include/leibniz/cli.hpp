#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz::cli {

enum ExitCode : int {
  kPass = 0,          // pass / equivalent / document written
  kFail = 1,          // axiom violations / not equivalent / generation failed
  kInconclusive = 2,  // equivalence undecided within budget
  kUsage = 3,         // usage, parse or precondition error
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz::cli
