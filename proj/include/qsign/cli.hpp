#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsign::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line (without the program name). Reports and dumps go
/// to `out` when their destination is "-"; logs and usage text go to `err`.
///
/// Exit codes: 0 every check passed, 1 a claim under test failed (e.g. a
/// sign violation), 2 usage or parameter error, 3 internal cross-validation
/// failure (oracle mismatch, inexact division).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsign::cli
