#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nullcolor::cli {

/// Runs one command (arguments without the program name). Returns the process
/// exit code: 0 on success, 1 on input errors, 2 when a guaranteed property
/// fails to hold.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nullcolor::cli
