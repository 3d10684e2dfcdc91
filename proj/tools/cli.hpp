#ifndef FRACINT_TOOLS_CLI_HPP
#define FRACINT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fracint::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. The default thread
/// count comes from FRACINT_THREADS when set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracint::cli

#endif  // FRACINT_TOOLS_CLI_HPP
