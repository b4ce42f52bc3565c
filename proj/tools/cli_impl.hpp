#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dunkl {

// Entry point shared by the binary and the tests.  Returns the process exit
// code: 0 on success (all checks passing), 1 when a verify suite fails, 2 on
// usage or computation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dunkl
