#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tanglekit::cli {

// Exit codes: 0 success or equivalent, 1 not equivalent, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace tanglekit::cli
