#pragma once

#include <iosfwd>

namespace shadowpack {

/// Dispatches the command line; returns the process exit code:
/// 0 success / all verifications passed, 1 a mathematical verification
/// failed, 2 invalid input or usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shadowpack
