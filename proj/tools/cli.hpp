#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dfx::cli {

/// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dfx::cli
