#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pk::cli {

// Runs exactly one subcommand and writes its report to `out`.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain error.
int dispatch(const std::vector<std::string>& args, std::ostream& out);

}  // namespace pk::cli
