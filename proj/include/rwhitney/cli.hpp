#ifndef RWHITNEY_CLI_HPP
#define RWHITNEY_CLI_HPP

#include <ostream>

namespace rwhitney
{

/// Exit codes: 0 success or all-pass, 1 verification failure, 2 usage error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Entry point of the `rwhitney` tool; output goes to `out` unless --out is given.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace rwhitney

#endif
