#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hh::cli {

// Full command-line entry point, separated from main() so tests can drive it
// in process. `args` excludes the program name. Returns the process exit
// code: 0 success / all checks pass, 1 a verification check failed, 2 usage
// or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hh::cli
