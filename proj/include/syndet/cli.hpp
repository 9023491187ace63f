#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace syndet {

/// Runs one command-line invocation. `args` is argv without the program
/// name. JSON reports go to `out` (or to the file named by --out), human
/// diagnostics to `err`. Returns the process exit status: 0 on success, 2 on
/// bad flags or malformed inputs, 3 when a resource cap was exhausted (the
/// report then carries the partial certificate).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace syndet
