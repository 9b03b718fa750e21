#pragma once

#include <iosfwd>

namespace qskel {

// Full command-line driver, callable in-process for tests. Writes payloads to out
// and error reports to err. Exit codes: 0 success (or oracle agreement), 1 a check
// that came back false, 2 usage / parse / domain / internal errors, 3 capacity.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qskel
