#ifndef BIHOM_TOOLS_CLI_HPP
#define BIHOM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bihom::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;
inline constexpr int kPrecondition = 3;
inline constexpr int kInternal = 4;

/// Runs the tool with `args` (excluding the program name). Reports and
/// documents go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bihom::cli

#endif  // BIHOM_TOOLS_CLI_HPP
