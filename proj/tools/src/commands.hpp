#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hmf::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kDisagreement = 2 };

// Runs the hmf command line. args excludes the program name. JSON goes to
// `out` (or to --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hmf::cli
