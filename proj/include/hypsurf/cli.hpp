// Command-line front end. Exit codes: 0 ok, 1 domain error, 2 usage error.
#ifndef HYPSURF_CLI_HPP
#define HYPSURF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hypsurf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. File arguments given as "-" read `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hypsurf

#endif  // HYPSURF_CLI_HPP
