#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bernlab {

/// Command-line driver, callable in-process for testing. Returns the exit
/// code of the stable contract: 0 success, 1 verification failure, 2 usage
/// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bernlab
