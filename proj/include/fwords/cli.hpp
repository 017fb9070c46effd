#ifndef FWORDS_CLI_HPP_
#define FWORDS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace fwords {

// Dispatches one command line (without the program name). Exit code
// protocol: 0 yes/success, 1 no, 2 unknown/budget exhausted, 3 usage or
// parse error. Output goes to the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fwords

#endif  // FWORDS_CLI_HPP_
