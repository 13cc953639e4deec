#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curved_landau::cli {

/// Runs the command-line tool on the given arguments (program name excluded).
/// All regular output goes to `out`, diagnostics to `err`.  Returns 0 on
/// success / all checks passed, 1 on verification failure, 2 on usage or
/// domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curved_landau::cli
