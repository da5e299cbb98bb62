#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace troman::cli {

/// Runs one invocation. args[0] is the program name. `in` backs the "-"
/// graph argument. Returns the process exit code: 0 success, 1 theorem or
/// claim failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace troman::cli
