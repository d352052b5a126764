#ifndef REENC_DIAGRAM_HPP
#define REENC_DIAGRAM_HPP

#include <vector>

#include "reenc/cnf.hpp"

namespace reenc {

// Mixed graph of a simple formula; one vertex per variable, one edge per
// clause: (¬u∨¬v) <-> undirected {u,v}, (¬u∨v) <-> directed (u,v).
// At most one of {u,v}, (u,v), (v,u) may be present.
struct Diagram {
    std::vector<Var> vertices;                     // sorted, unique
    std::vector<std::pair<Var, Var>> undirected;   // stored with u < v
    std::vector<std::pair<Var, Var>> directed;     // ordered pairs
};

enum class Pol : std::uint8_t { None = 0, Minus, Plus };

struct PolEdge {
    Var from, to;
    Pol pol;
    bool operator==(const PolEdge& o) const {
        return from == o.from && to == o.to && pol == o.pol;
    }
    bool operator<(const PolEdge& o) const {
        if (from != o.from) return from < o.from;
        if (to != o.to) return to < o.to;
        return pol < o.pol;
    }
};

// Every edge oriented and signed: − for formerly undirected, + for directed.
struct PolarizedDiagram {
    std::vector<Var> vertices; // sorted, unique
    std::vector<PolEdge> edges;
};

// Build the diagram of a simple formula (NotSimpleError/WidthError otherwise).
Diagram diagram_of(const Formula& f);

// Inverse direction: the simple formula whose diagram polarizes to g.
Formula formula_of_polarized(const PolarizedDiagram& g);

// Deterministic topological order of the directed part (Kahn, minimum id
// first); vertices untouched by directed edges take their id order.
// Throws CycleError with a witness cycle.
std::vector<Var> topo_order(const Diagram& d);

// Orient undirected edges by the given order (low to high), keep directed
// edges with polarity +. The order must be topological for d's directed part.
PolarizedDiagram polarize(const Diagram& d, const std::vector<Var>& order);

} // namespace reenc

#endif
