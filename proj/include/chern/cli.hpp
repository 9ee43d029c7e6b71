#ifndef CHERN_CLI_HPP
#define CHERN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace chern {

/// Entry point of the command-line tool, separated from main() so tests can
/// drive it in-process. `args` excludes the program name. Exit status:
/// 0 all checks hold, 1 at least one violation/refutation, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chern

#endif
