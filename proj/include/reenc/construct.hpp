#ifndef REENC_CONSTRUCT_HPP
#define REENC_CONSTRUCT_HPP

#include <set>
#include <string>
#include <vector>

#include "reenc/simplify.hpp"
#include "reenc/sprn.hpp"

namespace reenc {

// Block and part lengths for the shared-signature constructions. Undirected
// diagrams have two edge states per part slot (absent or present), general
// simple diagrams three (absent, minus, plus), hence the two schedules.
struct NechiporukParams {
    std::size_t q = 1; // block length: tails pair up inside a block
    std::size_t r = 1; // part length: heads are grouped into parts

    static NechiporukParams for_undirected(std::size_t n);
    static NechiporukParams for_general(std::size_t n);
};

// Network realizing polarize(d, vertex order) for a diagram with undirected
// edges only; MixedEdgesError otherwise. Auxiliaries are numbered upward
// from first_aux, which must exceed every vertex. The part length is chosen
// by sweeping candidates around the schedule and keeping the smallest
// network; when sharing never pays, the result is the zero-auxiliary direct
// network.
Prn nechiporuk_undirected(const Diagram& d, Var first_aux);

// Same machinery over polarize(d, topo_order(d)) for any simple diagram.
Prn nechiporuk_general(const Diagram& d, Var first_aux);

struct Reencoding {
    Formula formula;
    std::set<Var> aux;
};

// Reencode an arbitrary width-2 formula. Clauses split by polarity pattern
// into four fragments; flipping variables or reversing the vertex order
// maps every fragment onto the constructions above, so each is encoded
// separately, with auxiliary ranges allocated consecutively from first_aux.
// Resolving the auxiliaries away restores the input exactly.
Reencoding reencode_general(const Formula& f, Var first_aux);

// Chain network for at-most-one over xs (in the given order): 3n-6 edges
// for n >= 3. Up to four variables the direct clique is already that small.
Prn amo_ladder_net(const std::vector<Var>& xs, Var first_aux);
Reencoding amo_ladder(const std::vector<Var>& xs, Var first_aux);

// Grid encoding for at-most-one: every variable selects its row and column
// selector, and each selector axis is pairwise exclusive.
Reencoding amo_product(const std::vector<Var>& xs, Var first_aux);

struct ReencodeReport {
    std::string method;
    std::size_t input_clauses = 0;
    std::size_t output_clauses = 0;
    std::size_t aux_added = 0;
    double millis = 0.0;
};

struct AutoReencodeResult {
    Formula formula;
    std::set<Var> aux;
    ReencodeReport report;
    SimplificationResult simplification;
};

// Full pipeline for any width-2 formula: simplify, reencode the simple core
// (kept only when it is actually smaller), reassemble.
AutoReencodeResult auto_reencode(const Formula& f);

} // namespace reenc

#endif
