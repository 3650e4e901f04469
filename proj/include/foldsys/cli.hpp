#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "foldsys/folding.hpp"

namespace foldsys::cli {

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsage = 2 };

/// Runs one subcommand. `args` excludes the program name. Normal output goes
/// to `out`, one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One two-line block per step: "step t: fold up|down <symbol>" and the stack.
std::string render_trace(const FoldTrace& trace);

}  // namespace foldsys::cli
