#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace salemforge::cli {

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitPrecondition = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace salemforge::cli
