// Command-line front end. Exit codes: 0 answered (or positive), 1 negative
// answer of a yes/no command, 2 usage or input error, 3 resource guard hit,
// 4 the brute-force cross-check disagreed with the tableau.

#ifndef FLOGIC_CLI_HPP_
#define FLOGIC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace flogic {

enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitUsage = 2, kExitResource = 3, kExitDivergence = 4 };

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flogic

#endif  // FLOGIC_CLI_HPP_
