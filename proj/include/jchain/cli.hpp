#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jchain {

// CLI exit codes; stdout carries results, stderr diagnostics.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,           // generic error
    kParseError = 2,        // malformed file, scalar or usage
    kNotAnEigenvalue = 3,   // requested eigenvalue has no eigenspace
    kBadTruncation = 4,     // r out of bounds or misused
    kTheoremViolation = 5,  // a guaranteed identity failed (internal bug)
    kNotNilpotent = 6,      // Hamiltonian spectrum is not {0}
    kBadProblem = 7,        // Riccati invariants violated
};

/// Runs one CLI invocation (args excludes the program name). Results go to
/// out, diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jchain
