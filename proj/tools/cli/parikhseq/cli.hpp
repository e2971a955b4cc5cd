#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parikhseq::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace parikhseq::cli
