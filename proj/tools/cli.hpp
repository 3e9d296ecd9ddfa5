#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wlp::cli {

/// Exit codes: 0 success (WLP holds, all checks pass), 1 negative verdict
/// or failed check, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs the `wlp` command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a..b" or a single integer "a" into an inclusive range.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

}  // namespace wlp::cli
