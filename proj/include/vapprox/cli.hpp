#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vapprox::cli {

/// Runs one command line (args excludes the program name). Writes a single JSON
/// document to out. Returns 0 on success, 2 on input errors, 3 on invariant breaches.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace vapprox::cli
