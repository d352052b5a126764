#ifndef REENC_VERIFY_HPP
#define REENC_VERIFY_HPP

#include <optional>
#include <set>
#include <string>

#include "reenc/cnf.hpp"

namespace reenc {

// Cap on the number of live clauses during variable elimination.
struct BlowupGuard {
    std::size_t max_clauses = 10'000'000;
};

// Resolve away every variable in `aux`. Variables are eliminated in
// reverse topological order of the implication edges between them (a
// clause (~a v b) with both variables in `aux` orders a before b);
// ascending id breaks the remaining ties and covers cyclic leftovers.
// Throws BlowupGuardError when the live clause count passes the guard.
Formula eliminate_auxiliaries(const Formula& f, const std::set<Var>& aux,
                              BlowupGuard guard = {});

// Exact-recovery audit: eliminating `aux` from `enc` reproduces `orig`
// as a clause set.
bool recovers_exactly(const Formula& orig, const Formula& enc,
                      const std::set<Var>& aux, BlowupGuard guard = {});

struct EncodingMismatch {
    Assignment assignment;
    bool orig_sat = false;
    bool enc_sat = false;

    std::string describe() const;
};

// Semantic audit by exhaustion. For every total assignment of the source
// variables 1..orig.num_vars() (at most 20 of them), the encoding with its
// auxiliaries decided by search must be satisfiable exactly when the
// original is. Variables of `enc` must lie in the source range or in
// `enc_aux`.
std::optional<EncodingMismatch> check_encoding(const Formula& orig,
                                               const Formula& enc,
                                               const std::set<Var>& enc_aux);

} // namespace reenc

#endif
