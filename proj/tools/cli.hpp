#ifndef FGI_TOOLS_CLI_HPP
#define FGI_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fgi::cli {

enum Status : int { ok = 0, parse_failure = 2, domain_failure = 3, resource_failure = 4 };

/// Runs one command line (without the program name). Input is read from
/// `in` unless --in names a file; results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fgi::cli

#endif  // FGI_TOOLS_CLI_HPP
