#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace urnwalk::cli {

inline constexpr std::string_view kVersion = "1.0.0";

/// Runs one command line (without the program name). Output goes to `out`
/// unless --out is given; diagnostics go to `err`. Returns the exit status:
/// 0 on success, 2 on invalid flags or inputs, 1 on other failures.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace urnwalk::cli
