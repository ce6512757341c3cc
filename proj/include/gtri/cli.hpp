#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gtri {

/// Command-line front end. args excludes the program name. Reports go to out
/// as "key: value" lines; diagnostics go to err. Returns 0 on success or
/// PASS, 1 on FAIL findings or an invalid triangulation, 2 on usage, file or
/// parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtri
