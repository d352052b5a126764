#ifndef REENC_HEURISTIC_HPP
#define REENC_HEURISTIC_HPP

#include <cstdint>
#include <vector>

#include "reenc/sprn.hpp"

namespace reenc {

// One addition step on a formula: every product clause (c v d) for c in cs,
// d in ds must be present (PatternMissingError otherwise); they are replaced
// by {(c v y)} and {(~y v d)} for the fresh variable y (DomainError when y
// already occurs). Resolving y away restores f exactly.
Formula apply_bva_step(const Formula& f, const std::vector<Lit>& cs,
                       const std::vector<Lit>& ds, Var y);

// One greedy factoring on a network, for tracing.
struct HeuristicStep {
    std::vector<Var> tails;  // vertices whose shared out-pattern was factored
    std::vector<Lit> heads;  // the pattern, as head literals
    Var fresh = 0;
    std::size_t edges_after = 0;
};

// Greedy pairing driver. Each round seeds on a vertex of maximum literal
// out-degree, grows the tail set while the saving strictly improves, and
// factors the final tail/pattern pair through a fresh auxiliary when the
// saving is positive; otherwise it stops. Ties are broken by a seeded draw.
// Auxiliaries are numbered from first_aux; `trace`, when given, records the
// steps taken.
Prn run_heuristic(const Prn& net, Var first_aux, std::uint64_t seed,
                  std::vector<HeuristicStep>* trace = nullptr);

} // namespace reenc

#endif
