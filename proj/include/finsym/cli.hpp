#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace finsym {

/*
 * Command-line front end.  args excludes the program name.  Writes JSON (or
 * CSV where tabular) to out and diagnostics to err.  Returns 0 on success,
 * 1 when a verification ran and failed, 2 on usage errors.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finsym
