// Command-line front end. Exit codes: 0 success, 1 verification failed,
// 2 usage error, 3 budget exceeded, 4 internal invariant violation.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dupcode::cli {

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dupcode::cli
