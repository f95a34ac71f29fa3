#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flowshop {

// Entry point shared by the binary and the tests. args excludes the program
// name. Returns 0 on success, 1 on usage or input errors, 2 on solver errors
// (budget, overflow, timeout).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flowshop
