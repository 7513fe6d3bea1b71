#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqalg {

// Runs the command-line front end on already-split arguments (no program
// name).  Returns the process exit code: 0 on success, 1 on evaluation
// errors or failed checks, 2 on syntax errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace seqalg
