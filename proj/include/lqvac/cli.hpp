#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lqvac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one subcommand. `args` excludes the program name. Results go to `out`
/// (or the --out file), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lqvac::cli
