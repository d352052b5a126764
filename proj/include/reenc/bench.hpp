#ifndef REENC_BENCH_HPP
#define REENC_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "reenc/construct.hpp"

namespace reenc {

// Pairwise-exclusion clauses (~xi v ~xj) of a density-p random graph on
// x1..xn. Deterministic for a given seed.
Formula gen_exclusions(std::size_t n, double density, std::uint64_t seed);

// Threshold for the two benchmark regimes: comfortably below the expected
// independence number of a density-1/2 graph (satisfiable) or far above it
// (unsatisfiable), capped at n.
std::size_t regime_k(std::size_t n, bool unsat);

// Sequential unary counter for x1+...+xn >= k, clauses of width at most 3,
// register variables numbered from first_aux.
Reencoding count_at_least(const std::vector<Var>& xs, std::size_t k, Var first_aux);

// Split a formula into its all-negative width-2 clauses and the rest.
struct FragmentSplit {
    Formula fragment;
    Formula rest;
};
FragmentSplit split_binary_fragment(const Formula& f);

struct SolveOutcome {
    std::string status = "skipped"; // sat | unsat | timeout | skipped
    double seconds = 0.0;
};

// Run an external DIMACS solver on f; SolverError when the solver cannot be
// run or its verdict cannot be read.
SolveOutcome run_solver(const std::string& solver_path, const Formula& f,
                        double timeout_s);

// One benchmark trial, built deterministically from its seed: exclusion
// clauses plus a counter forcing at least k chosen vertices, and the same
// instance with the exclusion fragment reencoded and spliced back in.
struct BenchInstance {
    Formula before;
    Formula after;
    Formula fragment;
    Reencoding fragment_enc;
    std::size_t k = 0;
    double reencode_ms = 0.0;
};
BenchInstance build_instance(std::size_t n, double density, bool unsat_regime,
                             std::uint64_t seed);

struct BenchOptions {
    std::size_t n = 600;
    double density = 0.5;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    bool unsat_regime = false;
    bool audit = true;        // recover the fragment from its reencoding
    std::string solver;       // path to a DIMACS solver; empty skips solving
    double solver_timeout_s = 300.0;
};

struct BenchRow {
    std::size_t n = 0, k = 0;
    std::uint64_t seed = 0;
    std::size_t fragment_clauses = 0;
    std::size_t reencoded_clauses = 0;
    std::size_t total_before = 0;
    std::size_t total_after = 0;
    std::size_t aux_added = 0;
    double reencode_ms = 0.0;
    bool audited = false;
    SolveOutcome before, after;
};

// Audit happens before any solving, so solver time never hides a broken
// reencoding. Throws Error if an audit fails.
std::vector<BenchRow> run_bench(const BenchOptions& opt);

std::string rows_to_csv(const std::vector<BenchRow>& rows);
std::string rows_to_json(const std::vector<BenchRow>& rows);

} // namespace reenc

#endif
