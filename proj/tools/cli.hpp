#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toda::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kParseError = 2,
    kPrecondition = 3,
    kSearchExhausted = 4,
};

/// Runs the `toda` command line. Documents go to `out`; diagnostics are a
/// single line on `err` starting with "error[<kind>]: ".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toda::cli
