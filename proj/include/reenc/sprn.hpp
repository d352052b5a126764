#ifndef REENC_SPRN_HPP
#define REENC_SPRN_HPP

#include <optional>
#include <string>
#include <vector>

#include "reenc/diagram.hpp"

namespace reenc {

// Polarized rectifier network: base vertices, auxiliary vertices and directed
// edges; a polarity sits on exactly the edges whose head is a base vertex.
//
// Clause of an edge (u,v):  head auxiliary        -> (¬u ∨ v)
//                           head base, polarity + -> (¬u ∨ v)
//                           head base, polarity − -> (¬u ∨ ¬v)
// Clauses with two negated auxiliaries have no edge form, so they never
// appear in formulas produced here.
struct Prn {
    std::vector<Var> base; // sorted, unique
    std::vector<Var> aux;  // sorted, unique, disjoint from base
    std::vector<PolEdge> edges; // sorted by (from,to); pol None iff head aux

    // sort base/aux/edges into the order validate expects
    void canonicalize();
    // DomainError on any structural defect (unsorted or overlapping vertex
    // sets, unknown endpoints, self-loops, duplicate edges, misplaced
    // polarities)
    void validate() const;
    bool is_base(Var v) const;
    bool is_aux(Var v) const;
};

Formula formula_of(const Prn& n);

// The zero-auxiliary network whose walks are exactly the edges of g.
Prn prn_of(const PolarizedDiagram& g);

// A valid walk: base endpoints, auxiliary interior, sign of the last edge.
struct Walk {
    std::vector<Var> path; // length >= 2
    Pol sign = Pol::None;
    std::string describe() const;
};

// Exhaustive walk enumeration for test-sized networks, grouped by start
// vertex ascending. CycleError when a walk can revisit an auxiliary.
std::vector<Walk> all_valid_walks(const Prn& n);

// Strictness: at most one valid walk per unordered base pair (a base vertex
// paired with itself included), every auxiliary on some valid walk.
struct StrictViolation {
    enum class Kind { TwoWalks, AuxOffWalk };
    Kind kind;
    Var aux = 0;         // AuxOffWalk
    Walk first, second;  // TwoWalks
    std::string describe() const;
};
std::optional<StrictViolation> check_strict(const Prn& n);

// Realization: for every edge (u,v) of g there is a walk u ⇝ v, every walk
// u ⇝ v carries the sign of that edge, and no walk joins a non-adjacent
// pair (walks from a vertex to itself included).
struct RealizeViolation {
    enum class Kind { MissingEdge, SpuriousWalk, WrongSign, SelfWalk };
    Kind kind;
    PolEdge edge{}; // MissingEdge / WrongSign
    Walk walk;      // witness for everything but MissingEdge
    std::string describe() const;
};
std::optional<RealizeViolation> check_realizes(const Prn& n,
                                               const PolarizedDiagram& g);

// Coherent biclique reduction: requires xs × ys ⊆ E with the polarity
// constant per head across xs, and a fresh vertex id. Replaces the biclique
// by edges through the fresh auxiliary; the edge count changes by
// |xs| + |ys| − |xs||ys|. NotCoherentBicliqueError / DomainError otherwise.
Prn reduce_biclique(const Prn& n, const std::vector<Var>& xs,
                    const std::vector<Var>& ys, Var fresh);

// Splice out auxiliaries of in-degree or out-degree one until none remain
// (lowest id first). Walks, and hence the realized diagram, are preserved.
Prn contract_unit_degree(const Prn& n);

// GraphViz rendering: base vertices boxed, − edges dashed.
std::string to_dot(const Prn& n);

} // namespace reenc

#endif
