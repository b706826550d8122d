#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordlattice::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kError = 2, kResource = 3 };

/// Runs one command line (args exclude the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordlattice::cli
