#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidfoq::cli {

enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2, kUndecided = 3 };

/// Runs one command; args excludes the program name. The JSON report goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidfoq::cli
