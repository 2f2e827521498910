#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmc {

// Runs one command-line invocation (args exclude the program name) and writes
// results to the given streams. Returns 0 on success, 1 on domain errors,
// 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmc
