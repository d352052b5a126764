#include "reenc/heuristic.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "reenc/errors.hpp"

namespace reenc {

Formula apply_bva_step(const Formula& f, const std::vector<Lit>& cs,
                       const std::vector<Lit>& ds, Var y) {
    if (cs.empty() || ds.empty())
        throw DomainError("apply_bva_step: empty factor side");
    if (y == 0) throw DomainError("apply_bva_step: variable 0");
    for (Lit l : cs)
        if (l.var() == y) throw DomainError("apply_bva_step: y occurs in cs");
    for (Lit l : ds)
        if (l.var() == y) throw DomainError("apply_bva_step: y occurs in ds");
    if (f.vars().count(y))
        throw DomainError("apply_bva_step: fresh variable already occurs");

    std::vector<Clause> products;
    products.reserve(cs.size() * ds.size());
    for (Lit c : cs) {
        for (Lit d : ds) {
            auto p = Clause::try_make({c, d});
            if (!p || !f.contains(*p))
                throw PatternMissingError("apply_bva_step: product clause absent");
            products.push_back(std::move(*p));
        }
    }
    std::sort(products.begin(), products.end());
    products.erase(std::unique(products.begin(), products.end()), products.end());

    std::vector<Clause> out;
    out.reserve(f.size() - products.size() + cs.size() + ds.size());
    for (const Clause& c : f.clauses())
        if (!std::binary_search(products.begin(), products.end(), c))
            out.push_back(c);
    for (Lit c : cs) out.push_back(binary(c, Lit::pos(y)));
    for (Lit d : ds) out.push_back(binary(Lit::neg(y), d));
    return Formula(std::move(out), std::max(f.num_vars(), y));
}

namespace {

// Literal out-patterns of every vertex: N(v) holds the head literal of each
// out-edge of v. Patterns follow the stored orientation, so an accepted
// biclique is a plain edge biclique and reduce_biclique applies verbatim,
// which is what keeps the realized diagram intact across steps.
struct Index {
    std::vector<Var> verts;
    std::vector<std::vector<Lit>> nbh;
    std::unordered_map<std::int32_t, std::vector<std::uint32_t>> inv;

    std::uint32_t idx(Var v) const {
        return static_cast<std::uint32_t>(
            std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    }
};

Index build_index(const Prn& net) {
    Index ix;
    ix.verts.resize(net.base.size() + net.aux.size());
    std::merge(net.base.begin(), net.base.end(), net.aux.begin(), net.aux.end(),
               ix.verts.begin());
    ix.nbh.resize(ix.verts.size());
    for (const PolEdge& e : net.edges)
        ix.nbh[ix.idx(e.from)].push_back(e.pol == Pol::Minus ? Lit::neg(e.to)
                                                             : Lit::pos(e.to));
    for (std::uint32_t i = 0; i < ix.nbh.size(); ++i) {
        auto& ns = ix.nbh[i];
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        for (Lit l : ns) ix.inv[l.code()].push_back(i);
    }
    return ix;
}

} // namespace

Prn run_heuristic(const Prn& start, Var first_aux, std::uint64_t seed,
                  std::vector<HeuristicStep>* trace) {
    start.validate();
    Var top = 0;
    if (!start.base.empty()) top = start.base.back();
    if (!start.aux.empty()) top = std::max(top, start.aux.back());
    if (first_aux == 0 || first_aux <= top)
        throw DomainError("run_heuristic: auxiliary range overlaps the network");

    Prn net = start;
    std::mt19937_64 rng(seed);
    auto draw = [&](std::size_t k) -> std::size_t {
        return k < 2 ? 0 : static_cast<std::size_t>(rng() % k);
    };
    Var next = first_aux;

    for (;;) {
        const Index ix = build_index(net);
        const std::size_t nv = ix.verts.size();

        std::size_t best_deg = 0;
        for (std::uint32_t i = 0; i < nv; ++i)
            best_deg = std::max(best_deg, ix.nbh[i].size());
        if (best_deg == 0) break;
        std::vector<std::uint32_t> seeds;
        for (std::uint32_t i = 0; i < nv; ++i)
            if (ix.nbh[i].size() == best_deg) seeds.push_back(i);
        const std::uint32_t v = seeds[draw(seeds.size())];

        std::vector<Lit> R = ix.nbh[v];
        std::vector<std::uint32_t> L = {v};
        std::vector<char> inL(nv, 0);
        inL[v] = 1;
        long long Q = -1; // |L|*|R| - |L| - |R| with |L| = 1

        // Shared-pattern counts c[w] = |N(w) ∩ R| for every other vertex.
        std::vector<std::uint32_t> c(nv, 0);
        std::vector<std::uint32_t> touched;
        for (Lit l : R) {
            auto it = ix.inv.find(l.code());
            if (it == ix.inv.end()) continue;
            for (std::uint32_t w : it->second) {
                if (w == v) continue;
                if (c[w]++ == 0) touched.push_back(w);
            }
        }
        std::sort(touched.begin(), touched.end());

        for (;;) {
            std::uint32_t best_c = 0;
            for (std::uint32_t w : touched)
                if (!inL[w]) best_c = std::max(best_c, c[w]);
            if (best_c == 0) break;
            std::vector<std::uint32_t> ties;
            for (std::uint32_t w : touched)
                if (!inL[w] && c[w] == best_c) ties.push_back(w);
            const std::uint32_t w = ties[draw(ties.size())];

            const long long nl = static_cast<long long>(L.size()) + 1;
            const long long nr = best_c;
            const long long Qn = nl * nr - nl - nr;
            if (Qn <= Q) break;

            std::vector<Lit> rw;
            rw.reserve(best_c);
            std::set_intersection(R.begin(), R.end(), ix.nbh[w].begin(),
                                  ix.nbh[w].end(), std::back_inserter(rw));
            for (Lit l : R) {
                if (std::binary_search(rw.begin(), rw.end(), l)) continue;
                auto it = ix.inv.find(l.code());
                if (it == ix.inv.end()) continue;
                for (std::uint32_t u : it->second)
                    if (u != v && c[u] > 0) --c[u];
            }
            R = std::move(rw);
            L.push_back(w);
            inL[w] = 1;
            Q = Qn;
        }

        if (Q <= 0) break;

        // A pattern never holds two literals of one variable on networks
        // built here; drop extras defensively so the biclique stays clean.
        {
            std::vector<Lit> rd;
            for (Lit l : R)
                if (rd.empty() || rd.back().var() != l.var()) rd.push_back(l);
            R = std::move(rd);
        }

        std::vector<Var> tails;
        tails.reserve(L.size());
        for (std::uint32_t i : L) tails.push_back(ix.verts[i]);
        std::sort(tails.begin(), tails.end());
        std::vector<Var> heads;
        heads.reserve(R.size());
        for (Lit l : R) heads.push_back(l.var());

        const Var y = next++;
        net = reduce_biclique(net, tails, heads, y);
        if (trace) trace->push_back({tails, R, y, net.edges.size()});
    }
    return net;
}

} // namespace reenc
