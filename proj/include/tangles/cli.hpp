#ifndef TANGLES_CLI_HPP
#define TANGLES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tangles {

// Batch command dispatcher. args excludes the program name. Exit status:
// 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace tangles

#endif
