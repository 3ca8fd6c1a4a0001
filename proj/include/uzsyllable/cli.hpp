#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uzsyllable {

// Runs the command-line front end. `args` excludes the program name.
// Returns 0 on success, 1 on usage errors, 2 on I/O or dataset failures.
int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace uzsyllable
