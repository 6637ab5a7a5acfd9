#pragma once

#include <iosfwd>

namespace corient {

/// Command-line entry point. Exit codes: 0 success, 1 input or usage error,
/// 2 verification mismatch.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace corient
