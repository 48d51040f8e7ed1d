#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bc1::cli {

/// Entry point shared by the binary and the in-process tests.
/// args excludes the program name. Exit codes: 0 success, 1 identity or
/// tolerance failure, 2 invalid usage, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bc1::cli
