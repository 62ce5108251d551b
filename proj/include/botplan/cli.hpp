#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace botplan {

/// Parses and runs one command-line invocation. `args` excludes the program
/// name. Returns the process exit code: 0 on success, 1 for usage or input
/// errors, 2 when the constraint is infeasible, 3 when --strict is set and
/// the produced plan violates its constraint.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace botplan
