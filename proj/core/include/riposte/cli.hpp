#pragma once

/**
 * Command-line front end.
 *
 * Subcommands: validate, matrices, ale, rank, evaluate. Global flags:
 * --scenario (required), --format {table|csv|json}, --output, --seed,
 * --quiet. Exit codes: 0 success, 1 I/O or parse failure (including bad
 * usage), 2 validation errors, 3 computation errors. Warnings go to the
 * error stream and never change a zero exit code.
 */

#include <ostream>
#include <string>
#include <vector>

namespace riposte::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIoOrParse = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitComputation = 3;

/// Runs the CLI with explicit streams (tests drive this in-process).
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// main()-shaped wrapper.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace riposte::cli
