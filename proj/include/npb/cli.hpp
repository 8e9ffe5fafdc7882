#pragma once

// Command-line front end. Exit codes: 0 pass, 1 verified failure (the
// report carries witnesses), 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace npb::cli {

/// Runs one command line given without the program name. The JSON report
/// goes to --out when given and to out otherwise; a one-line summary and
/// usage errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace npb::cli
