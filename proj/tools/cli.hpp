#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace barymorph::cli {

/// Process exit codes.
enum Exit : int { ok = 0, failure = 1, parse_error = 2, validation_error = 3, solver_error = 4 };

/// Runs one command line (arguments after the program name). Results go to
/// `out` unless redirected to files; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barymorph::cli
