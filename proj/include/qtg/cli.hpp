#pragma once

/**
 * @file cli.hpp
 * @brief The qtg command-line frontend, exposed as a library call so it can
 *        be driven in-process by tests.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace qtg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;  // bad note, chord, axis, file, ...
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Run one invocation. args excludes the program name. On failure nothing is
/// written to out; diagnostics go to err. Transformation words ("RLR") are
/// applied left to right: "RL" applies R first.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qtg
