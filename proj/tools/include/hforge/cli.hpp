#pragma once

#include <iosfwd>

namespace hforge::cli {

/// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. JSON results go to `out`, diagnostics and the
/// suite table to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hforge::cli
