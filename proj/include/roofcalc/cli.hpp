#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace roofcalc::cli {

enum ExitCode : int {
  kOk = 0,
  kNoCertificate = 1,
  kValidation = 2,
  kResourceCap = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace roofcalc::cli
