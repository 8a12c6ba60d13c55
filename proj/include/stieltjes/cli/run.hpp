#pragma once

#include "stieltjes/cli/report.hpp"
#include "stieltjes/cli/run_config.hpp"

#include <ostream>

namespace stieltjes::cli {

inline constexpr const char* kToolVersion = "1.0.0";

// Executes the sweep selected by config. Throws ConfigError on invalid input.
Report execute(const RunConfig& config);

// Full contract: validates, executes, writes the report to config.output
// (or `out`), and returns 0 if every case passed, 1 if any failed, 2 on a
// configuration error (message on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace stieltjes::cli
