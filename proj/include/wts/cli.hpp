#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wts {

// Exit codes: 0 success, 1 usage error, 2 domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wts
