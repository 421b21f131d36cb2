#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metriq::cli {

// Dispatch one command line (without the program name).  Writes the report to
// `out` and diagnostics to `err`; returns 0 when every residual passes, 1 when
// any check fails or no metric could be found, 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metriq::cli
