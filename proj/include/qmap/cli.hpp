#pragma once

#include <iosfwd>

namespace qmap {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failed or input rejected
inline constexpr int kExitUsage = 2;

/// Entry point behind the `qmap` binary. Standard streams are passed in so the
/// commands can be driven from tests.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qmap
