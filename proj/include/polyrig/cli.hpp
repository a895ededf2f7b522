#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyrig {

// Batch CLI entry point; returns the process exit code
// (0 ok, 2 validation error, 3 computational failure).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace polyrig
