#ifndef DEDEKIND_CLI_HPP
#define DEDEKIND_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dedekind::cli {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 runtime or check failure, 2 usage error,
/// 3 capability limit, 4 accumulator overflow.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dedekind::cli

#endif // DEDEKIND_CLI_HPP
