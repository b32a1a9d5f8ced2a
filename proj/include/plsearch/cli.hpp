#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plsearch {

/// Entry point behind the `plsearch` tool. args excludes the program name.
/// Returns 0 on success, 2 on usage or validation errors, 1 on runtime
/// failures. Human-readable summaries go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plsearch
