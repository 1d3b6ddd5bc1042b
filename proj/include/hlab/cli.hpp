#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hlab::cli {

/// Runs one subcommand. `args` excludes the program name.
/// Exit codes: 0 all match / success, 1 mismatch, 2 usage, parse or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlab::cli
