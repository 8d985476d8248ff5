#ifndef REALENUM_CLI_HPP
#define REALENUM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace realenum {

// Whole command-line front end, in-process for testability.
// Exit codes: 0 ok, 1 a check failed, 2 bad input, 3 internal inconsistency.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace realenum

#endif  // REALENUM_CLI_HPP
