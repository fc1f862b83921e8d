#pragma once

#include <ostream>

namespace dct3mg_cli {

// Parses and runs one CLI invocation. Returns the process exit code:
// 0 success / all cells pass, 1 usage error, 2 numerical failure or
// reference-table mismatch.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dct3mg_cli
