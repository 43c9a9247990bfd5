#ifndef IWASAWA_CLI_HPP
#define IWASAWA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace iwasawa::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_fixture = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_contradiction = 3;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit status.
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace iwasawa::cli

#endif /* IWASAWA_CLI_HPP */
