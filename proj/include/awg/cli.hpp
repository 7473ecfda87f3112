#pragma once

#include <ostream>

namespace awg::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 2, kDomainError = 3 };

/// Entry point of the awgcalc command line. Output files are written only
/// after every computation succeeded; a nonzero exit leaves no files behind.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace awg::cli
