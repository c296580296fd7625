#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schemelab::cli {

// Runs one command line (without the program name). Results go to `out` (or
// to --out FILE), diagnostics to `err`. Returns 0 on success, 1 when a
// verification fails and 2 for usage or validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schemelab::cli
