#ifndef ULW_CLI_HPP
#define ULW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ulw::cli {

/// Exit codes: 0 success, 1 domain/validation failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ulw::cli

#endif  // ULW_CLI_HPP
