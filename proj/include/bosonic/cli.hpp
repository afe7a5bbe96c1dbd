// cli.hpp
// Command-line front end. Exposed as a library function so the dispatch,
// output formats and exit codes are testable in-process.
//
// Exit codes: 0 success, 1 domain error (bad arguments or invalid physics
// input), 2 verification failure.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bosonic::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Oracle cross-check suite used by the verify command. Prints one line per
/// check; returns true when everything passed. inject_perturbation corrupts
/// one dense eigenvalue first and is the suite's negative control.
bool run_verification(int max_total_photons, bool inject_perturbation,
                      std::ostream& out);

}  // namespace bosonic::cli
