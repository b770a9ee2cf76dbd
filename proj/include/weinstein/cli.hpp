#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weinstein {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the command-line tool. `args` excludes the program name.
/// Returns 0 on success, 1 when a numerical check fails (selftest) or a
/// computation throws, 2 on usage, config or input-format errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_command(int argc, char** argv);

}  // namespace weinstein
