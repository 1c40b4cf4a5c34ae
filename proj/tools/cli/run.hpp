#pragma once

#include <ostream>

#include "run_config.hpp"

namespace trunc_hermite::cli {

/// Executes one command, writing the result to config.out (or `out`) and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run, with usage errors reported on `err`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trunc_hermite::cli
