#ifndef WILFLAB_CLI_HPP
#define WILFLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wilflab::cli {

enum ExitCode : int { ok = 0, usage_error = 1, domain_error = 2 };

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wilflab::cli

#endif // WILFLAB_CLI_HPP
