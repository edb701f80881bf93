#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "powsum/verify.hpp"

namespace powsum::cli {

enum ExitCode : int {
    success = 0,
    verification_failed = 1,
    usage_error = 2,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Backs the `verify` subcommand; exposed so tests can inject formulas.
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace powsum::cli
