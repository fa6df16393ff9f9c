#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qstar::cli {

/// Runs the qstar command line. `args` excludes the program name. Results go
/// to `out` (or the --out file), diagnostics to `err`.
/// Returns 0 on success, 1 when a verification finds a violation or
/// --self-check disagrees, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qstar::cli
