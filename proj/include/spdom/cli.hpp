#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spdom::cli {

// Executes one command (args exclude the program name), writing the report
// to `out` and diagnostics to `err`. Exit codes: 0 success, 2 usage or
// parse/validation error, 3 unsupported input, 4 demo assertion failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spdom::cli
