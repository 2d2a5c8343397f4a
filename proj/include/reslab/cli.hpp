#ifndef RESLAB_CLI_HPP
#define RESLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace reslab::cli {

/// Runs one CLI invocation. Exit codes: 0 success (domain verdicts such as an
/// infeasible limit case are successes), 1 domain/input errors, 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reslab::cli

#endif
