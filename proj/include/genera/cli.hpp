#pragma once

#include <iosfwd>

namespace genera {

/// Parses and runs one CLI invocation.  Returns the process exit code:
/// 0 on success, 1 for domain errors (and failed verification runs),
/// 2 for usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace genera
