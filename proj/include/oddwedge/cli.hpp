#pragma once

// Command-line driver.  run_cli is the whole program behind main(): it is a
// plain function so tests can drive subcommands in-process.  Exit codes:
// 0 success / verified, 1 verification failure, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace oddwedge {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddwedge
