#pragma once

// bpu-verify: runs verification checks and prints their reports.

#include <iosfwd>
#include <string>
#include <vector>

namespace bpu::cli {

/// args excludes the program name.  Returns the process exit code:
/// 0 when every check passes, 1 when one fails, 2 for usage errors and
/// precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bpu::cli
