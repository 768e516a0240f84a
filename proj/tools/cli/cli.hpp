#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsym::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, parse_error = 2 };

/// Runs one command line (without the program name), writing results to `out`
/// and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hsym::cli
