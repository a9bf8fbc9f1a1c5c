#pragma once

#include <iosfwd>

namespace coinslide::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsage = 2,
  kCheckFailed = 3,  // verification failure or oracle/formula disagreement
};

// Entry point shared by the executable and the tests. `in` feeds the
// interactive `play` loop.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace coinslide::cli
