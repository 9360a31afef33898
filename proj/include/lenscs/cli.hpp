#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lenscs {

// Command-line driver, split from main() so tests can run commands
// in-process. args excludes argv[0]. Reports are JSON envelopes written to
// out (or to the --out file); diagnostics go to err. Returns the process
// exit code: 0 success, 2 usage error, 3 numeric failure, 4 budget exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lenscs
