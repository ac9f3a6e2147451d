#ifndef IVPOLY_CLI_HPP
#define IVPOLY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ivpoly {

// Exit codes: 0 success / property holds, 2 property violated (witness
// printed), 3 usage or parse error, 4 resource or precision limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivpoly

#endif
