#pragma once

#include <ostream>

namespace iterprimes {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,        ///< an applicable bound or threshold failed
    kExitBudget = 2,           ///< budget or resource exhaustion
    kExitOutOfHypothesis = 3,  ///< certify saw violations outside x >= 4200
    kExitInvalidInput = 4,     ///< bad arguments, domain or hypothesis errors, bad cache file
};

/// Runs the command line tool with the given arguments; output goes to
/// `out` unless --out names a file, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iterprimes
