#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace osk {

// Runs one CLI invocation. args excludes the program name. Exit codes:
// 0 success, 1 computation-limit/internal error, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osk
