#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symbool {

/// Runs the command line (args excludes the program name). Returns 0 when
/// everything passed, 1 on a FAIL or a report mismatch, 2 on usage errors.
int run_cli(std::vector<std::string> const& args,
            std::ostream& out,
            std::ostream& err);

}  // namespace symbool
