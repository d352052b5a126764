#include "reenc/diagram.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "reenc/simplify.hpp"

namespace reenc {

Diagram diagram_of(const Formula& f) {
    if (auto v = is_simple(f))
        throw NotSimpleError("diagram_of: " + v->describe());
    Diagram d;
    auto vs = f.vars();
    d.vertices.assign(vs.begin(), vs.end());
    for (const auto& c : f.clauses()) {
        Lit a = c.lits()[0], b = c.lits()[1];
        if (!a.positive() && !b.positive()) {
            Var u = std::min(a.var(), b.var()), v = std::max(a.var(), b.var());
            d.undirected.emplace_back(u, v);
        } else {
            // exactly one positive literal (simple => Horn, no both-positive)
            Lit negl = a.positive() ? b : a;
            Lit posl = a.positive() ? a : b;
            d.directed.emplace_back(negl.var(), posl.var());
        }
    }
    std::sort(d.undirected.begin(), d.undirected.end());
    std::sort(d.directed.begin(), d.directed.end());
    return d;
}

Formula formula_of_polarized(const PolarizedDiagram& g) {
    std::vector<Clause> cs;
    cs.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        if (e.pol == Pol::Minus)
            cs.push_back(binary(Lit::neg(e.from), Lit::neg(e.to)));
        else
            cs.push_back(binary(Lit::neg(e.from), Lit::pos(e.to)));
    }
    Formula f(std::move(cs));
    for (Var v : g.vertices) f.declare_vars(v);
    return f;
}

std::vector<Var> topo_order(const Diagram& d) {
    std::unordered_map<Var, std::uint32_t> idx;
    idx.reserve(d.vertices.size());
    for (std::uint32_t i = 0; i < d.vertices.size(); ++i)
        idx[d.vertices[i]] = i;
    std::size_t n = d.vertices.size();
    std::vector<std::uint32_t> indeg(n, 0);
    std::vector<std::vector<std::uint32_t>> out(n);
    for (const auto& [u, v] : d.directed) {
        out[idx.at(u)].push_back(idx.at(v));
        ++indeg[idx.at(v)];
    }

    // Kahn with a min-id frontier (vertices are sorted, so index order
    // is id order).
    std::vector<Var> order;
    order.reserve(n);
    std::vector<bool> done(n, false);
    std::vector<std::uint32_t> frontier; // kept as a min-heap over indices
    auto push = [&](std::uint32_t i) {
        frontier.push_back(i);
        std::push_heap(frontier.begin(), frontier.end(),
                       std::greater<std::uint32_t>());
    };
    for (std::uint32_t i = 0; i < n; ++i)
        if (indeg[i] == 0) push(i);
    while (!frontier.empty()) {
        std::pop_heap(frontier.begin(), frontier.end(),
                      std::greater<std::uint32_t>());
        std::uint32_t i = frontier.back();
        frontier.pop_back();
        done[i] = true;
        order.push_back(d.vertices[i]);
        for (std::uint32_t j : out[i])
            if (--indeg[j] == 0) push(j);
    }
    if (order.size() == n) return order;

    // Stalled: walk backwards through unfinished vertices until one repeats.
    std::vector<std::vector<std::uint32_t>> in(n);
    for (const auto& [u, v] : d.directed)
        if (!done[idx.at(u)] && !done[idx.at(v)])
            in[idx.at(v)].push_back(idx.at(u));
    std::uint32_t cur = 0;
    while (done[cur] || indeg[cur] == 0) ++cur;
    std::vector<std::uint32_t> path;
    std::vector<std::int32_t> seen_at(n, -1);
    for (;;) {
        if (seen_at[cur] >= 0) {
            // path follows in-edges, so flip it to read along edge direction
            std::vector<unsigned> cyc;
            cyc.push_back(d.vertices[cur]);
            for (std::size_t k = path.size(); k-- > std::size_t(seen_at[cur]);)
                cyc.push_back(d.vertices[path[k]]);
            throw CycleError("topo_order: directed part has a cycle", cyc);
        }
        seen_at[cur] = static_cast<std::int32_t>(path.size());
        path.push_back(cur);
        cur = in[cur].front(); // every unfinished vertex has an in-edge
    }
}

PolarizedDiagram polarize(const Diagram& d, const std::vector<Var>& order) {
    std::unordered_map<Var, std::uint32_t> pos;
    pos.reserve(order.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    PolarizedDiagram g;
    g.vertices = d.vertices;
    g.edges.reserve(d.undirected.size() + d.directed.size());
    for (const auto& [u, v] : d.directed) {
        if (pos.at(u) >= pos.at(v))
            throw DomainError("polarize: order is not topological");
        g.edges.push_back({u, v, Pol::Plus});
    }
    for (const auto& [u, v] : d.undirected) {
        if (pos.at(u) < pos.at(v))
            g.edges.push_back({u, v, Pol::Minus});
        else
            g.edges.push_back({v, u, Pol::Minus});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace reenc
