#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mecs::cli {

// Runs one command line (args excludes the program name). Exit codes: 0 YES/success,
// 1 NO/failed check, 2 budget exhausted or error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mecs::cli
