#ifndef REENC_CNF_HPP
#define REENC_CNF_HPP

#include <cstdint>
#include <cstdlib>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reenc/errors.hpp"

namespace reenc {

using Var = std::uint32_t; // variable ids are 1-based

// A literal in DIMACS convention: +v or -v, never 0.
class Lit {
public:
    Lit() : code_(0) {}
    explicit Lit(std::int32_t code) : code_(code) {}
    static Lit pos(Var v) { return Lit(static_cast<std::int32_t>(v)); }
    static Lit neg(Var v) { return Lit(-static_cast<std::int32_t>(v)); }

    Var var() const { return static_cast<Var>(std::abs(code_)); }
    bool positive() const { return code_ > 0; }
    std::int32_t code() const { return code_; }
    Lit operator~() const { return Lit(-code_); }

    bool operator==(const Lit& o) const { return code_ == o.code_; }
    bool operator!=(const Lit& o) const { return code_ != o.code_; }
    // Order by variable, negative phase first within a variable.
    bool operator<(const Lit& o) const {
        if (var() != o.var()) return var() < o.var();
        return code_ < o.code_;
    }

private:
    std::int32_t code_;
};

// A clause is a set of non-complementary literals, kept sorted and unique.
// Constructing a tautological clause throws TautologyError.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Lit> lits);
    Clause(std::initializer_list<std::int32_t> codes);

    // Returns nullopt instead of throwing when the union is tautological.
    static std::optional<Clause> try_make(std::vector<Lit> lits);

    const std::vector<Lit>& lits() const { return lits_; }
    std::size_t width() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }
    bool contains(Lit l) const;

    bool operator==(const Clause& o) const { return lits_ == o.lits_; }
    bool operator!=(const Clause& o) const { return lits_ != o.lits_; }
    bool operator<(const Clause& o) const { return lits_ < o.lits_; }

private:
    std::vector<Lit> lits_;
};

// Partial assignment.
using Assignment = std::map<Var, bool>;

// A CNF formula with set semantics: clauses are kept sorted and
// deduplicated, so two formulas are equal iff their clause sets are.
// num_vars is max(declared, highest variable referenced).
class Formula {
public:
    Formula() = default;
    explicit Formula(std::vector<Clause> clauses, Var declared_vars = 0);

    const std::vector<Clause>& clauses() const { return clauses_; }
    std::size_t size() const { return clauses_.size(); }
    bool empty() const { return clauses_.empty(); }
    Var num_vars() const { return num_vars_; }
    void declare_vars(Var n); // grow num_vars only

    bool contains(const Clause& c) const;
    bool has_empty_clause() const;
    std::size_t max_width() const;
    std::set<Var> vars() const;

    void add(const Clause& c);                 // keeps canonical order
    void add_all(std::vector<Clause> clauses); // bulk, re-canonicalizes

    bool operator==(const Formula& o) const { return clauses_ == o.clauses_; }
    bool operator!=(const Formula& o) const { return clauses_ != o.clauses_; }

private:
    void canonicalize();
    std::vector<Clause> clauses_;
    Var num_vars_ = 0;
};

// --- DIMACS ---------------------------------------------------------------

struct DimacsFile {
    Formula formula;
    std::set<Var> aux; // from "c aux <id>..." comment lines
};

// Strict DIMACS reader. Accepts "c aux <id>..." comments declaring
// auxiliary variables; rejects tautological clauses, out-of-range
// literals, clause-count mismatches and unterminated clauses.
DimacsFile parse_dimacs(std::istream& in);
DimacsFile parse_dimacs(const std::string& text);

// Deterministic writer: clauses sorted ascending by literal sequence,
// aux declared in a "c aux" comment. parse_dimacs(emit_dimacs(f, aux))
// reproduces both formula and aux set exactly.
std::string emit_dimacs(const Formula& f, const std::set<Var>& aux = {});

// --- Semantics ------------------------------------------------------------

// f restricted by a partial assignment: satisfied clauses removed,
// falsified literals deleted from the rest.
Formula restrict_formula(const Formula& f, const Assignment& a);

struct UnitPropResult {
    bool conflict = false;
    Formula residual;       // unit-free residue (empty when conflict)
    std::vector<Lit> trail; // literals assigned, in propagation order
};

// Propagate all unit clauses to fixpoint. `assume` seeds the trail.
UnitPropResult unit_propagate(const Formula& f,
                              const std::vector<Lit>& assume = {});

// --- 2-SAT ----------------------------------------------------------------

// Partition of literals into implication-graph SCC classes.
class LiteralPartition {
public:
    LiteralPartition() = default;
    LiteralPartition(Var num_vars, std::vector<std::uint32_t> comp);

    Var num_vars() const { return num_vars_; }
    std::uint32_t comp_of(Lit l) const;
    // Canonical representative: the literal of lowest variable id in the
    // class of l. Satisfies rep(~l) == ~rep(l).
    Lit rep(Lit l) const;
    // All classes with >= 2 literals, each sorted, classes sorted by rep.
    std::vector<std::vector<Lit>> nontrivial_classes() const;

private:
    Var num_vars_ = 0;
    std::vector<std::uint32_t> comp_; // index: 2*(v-1) + (negative ? 1 : 0)
    std::vector<Lit> rep_;            // canonical rep per literal index
};

struct TwoSatResult {
    bool sat = false;
    Assignment model;          // total over referenced vars when sat
    LiteralPartition classes;  // literal SCC classes (empty-clause unsat
                               // short-circuits with a trivial partition)
};

// Tarjan-based 2-SAT. Clauses of width <= 2 only (WidthError otherwise);
// a width-0 clause makes the formula unsatisfiable outright.
TwoSatResult solve_2sat(const Formula& f);

// --- Davis–Putnam elimination ----------------------------------------------

// Resolve every pos/neg clause pair on v, drop tautologies and all
// clauses mentioning v. Set semantics on the result.
Formula eliminate_variable(const Formula& f, Var v);

// Helpers used across modules.
Clause binary(Lit a, Lit b);
Formula at_most_one_direct(const std::vector<Var>& vars);

} // namespace reenc

#endif
