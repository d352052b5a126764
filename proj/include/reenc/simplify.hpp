#ifndef REENC_SIMPLIFY_HPP
#define REENC_SIMPLIFY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reenc/cnf.hpp"

namespace reenc {

// A 2-CNF formula is simple iff (a) its implication graph identifies no two
// literals, (b) every clause has a negative literal, (c) no two clauses
// share a variable pair.
struct SimplicityViolation {
    enum class Kind { EquivalentLiterals, PositiveClause, DuplicateVarPair };
    Kind kind;
    // witnesses: two literals for (a), one clause for (b), two clauses for (c)
    std::vector<Lit> lits;
    std::vector<Clause> clauses;
    std::string describe() const;
};

// nullopt when simple; first violation found otherwise. WidthError unless
// every clause has width exactly 2.
std::optional<SimplicityViolation> is_simple(const Formula& f);

// Inverse data of the simplification, enough to rebuild an encoding of the
// input from an encoding of the core.
struct SimplificationResult {
    Formula core;             // simple (or the single empty clause if unsat)
    bool unsat = false;
    // positive literal -> representative, one entry per substituted variable
    std::vector<std::pair<Lit, Lit>> equiv;
    std::vector<Lit> forced;  // every literal fixed during propagation
    std::set<Var> renamed;    // variables flipped by the Horn renaming
    Var original_vars = 0;
};

// Pipeline: equivalent-literal substitution (SCC classes), the weak
// failed-literal rule ((ℓ∨x) and (ℓ∨¬x) both present entail ℓ), unit
// propagation of everything entailed, then a Horn renaming obtained from a
// 2-SAT model. Idempotent on simple inputs.
SimplificationResult simplify_to_simple(const Formula& f);

// Rebuild an encoding of the original from an encoding of the core:
// un-flip renamed variables, re-add equivalence clauses (¬ℓ∨h(ℓ)),(¬h(ℓ)∨ℓ)
// and, per forced ℓ, the pair (ℓ∨a)∧(ℓ∨¬a) with a the lowest original
// variable other than var(ℓ). Adds at most 4n + 2|forced| clauses.
std::pair<Formula, std::set<Var>> reassemble(const Formula& core_encoding,
                                             const SimplificationResult& s,
                                             const std::set<Var>& core_aux);

// JSON side channel:
// {"equiv": [[lit, rep], ...], "forced": [...], "renamed": [...],
//  "unsat": b, "vars": n}
std::string write_simplification_map(const SimplificationResult& s);
SimplificationResult read_simplification_map(const std::string& json_text);

} // namespace reenc

#endif
