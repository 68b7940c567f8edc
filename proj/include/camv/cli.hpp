#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace camv::cli {

/// Runs one batch command. `args` excludes the program name, e.g.
/// {"sweep", "--scenario", "s.json", "--out", "dir"}. Success prints one JSON
/// status line to `out`; failure prints one JSON error line to `err`.
/// Returns 0 on success, 2 on usage errors, 3 on config errors, 1 otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace camv::cli
