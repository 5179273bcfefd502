#pragma once

#include <string>

#include "expcircle/json_io.hpp"

namespace expcircle {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitIo = 4;

// Homology of exp_k with the sphere verdict; schema expcircle-homology/1.
Json homology_report(long k);

// Power-map degree via the closed formula, optionally checked against the
// enumeration oracle; schema expcircle-degree/1.
Json degree_report(long k, long d, bool oracle, unsigned long long budget);

// The full verification dossier up to k_max; schema expcircle-report/1.
// Deterministic for a fixed (max_k, budget).
Json full_report(long max_k, unsigned long long budget);

// Markdown rendering of any of the three report payloads.
std::string render_markdown(const Json& report);

// "0", "Z", "Z^2", "Z + Z/2", ...
std::string homology_group_to_string(const HomologyGroup& h);

// Laurent polynomial in conventional ascending-exponent notation.
std::string laurent_to_string(const LaurentPolynomial& p);

// Entry point used by the binary; parses flags, runs the subcommand, writes
// the report, and maps failures onto the exit-code contract.
int run_cli(int argc, char** argv);

}  // namespace expcircle
