#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framelab {

// Parses and runs one framelab invocation.  args excludes the program name.
// Exit codes: 0 success/certified, 1 checked-and-failed, 2 usage or
// configuration error, 3 budget exceeded.  Reports go to `out` (or the
// --out file); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv);

}  // namespace framelab
