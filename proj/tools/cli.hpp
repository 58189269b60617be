#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace luka::cli {

// Runs one CLI invocation. Returns 0 on success, 1 on verification or
// computation failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace luka::cli
