#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tilt3::cli {

/// Runs one CLI invocation (args exclude the program name). Pure: identical
/// arguments produce byte-identical streams. Exit codes: 0 success, 1 invalid
/// input, 2 failed verification.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tilt3::cli
