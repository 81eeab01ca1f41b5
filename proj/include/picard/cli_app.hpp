#pragma once

#include <string>
#include <vector>

namespace picard {

/// Command-line entry point.  Exit codes: 0 success, 1 usage error,
/// 2 certification failure, 3 arithmetic overflow.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

} // namespace picard
