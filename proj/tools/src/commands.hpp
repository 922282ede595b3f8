#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extsq::cli {

// Exit codes: 0 the property holds, 1 it fails, 2 usage, parse or
// precondition error.
enum Exit { ok = 0, fails = 1, usage = 2 };

// Runs one command line (args excludes the program name). JSON goes to
// `out`, diagnostics to `err`; "-" or a missing --in reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace extsq::cli
