#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace normext::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Knobs for the property suite. The defaults are the pinned acceptance
/// parameters; the CLI `check` subcommand can shrink them for quick runs.
struct VerifyOptions {
    std::uint64_t seed = 20260814;

    // Prime-step extension sweep (restriction identity, validity of the
    // produced norms, cap stability of the capped evaluator).
    std::int64_t sweep_max_order = 64;
    int norms_per_pair = 20;
    int capped_samples = 60;               // literal capped-evaluator spot checks
    std::int64_t capped_sample_work = 3'000'000;

    // Matching oracle.
    std::int64_t oracle_max_order = 16;
    int oracle_queries = 500;
    std::int64_t oracle_work_budget = 2'000'000;

    // Transversals.
    int transversal_instances = 1000;
    int pfractional_instances = 500;

    // Birkhoff decompositions.
    int birkhoff_instances = 500;

    // Chain extensions.
    std::int64_t chain_max_order = 64;
    int chain_norms_per_subgroup = 1;

    // Winding example.
    int winding_kmax = 20;
    int winding_triangle_kmax = 5;
    long winding_triangle_samples = 100'000;
    long winding_identity_samples = 100'000;
    double winding_tolerance = 1e-12;

    // Lattice case.
    std::int64_t lattice_window = 8;
};

/// Runs the nine property checks and returns one result per check, in a
/// fixed order. `log`, when given, receives one progress line per check.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts, std::ostream* log = nullptr);

} // namespace normext::verify
