#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace operadkit {

// Runs one command; `args` is the command line without the program name.
// Exit codes: 0 success or check passed, 1 a mathematical check failed,
// 2 bad command line or malformed input file, 3 an input violates a
// contract (invalid complex or algebra, out-of-range index or weight,
// complex/structure mismatch).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace operadkit
