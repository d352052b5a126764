#include "reenc/cnf.hpp"

#include <algorithm>

namespace reenc {

// literal index: 2*(v-1) for +v, 2*(v-1)+1 for -v
static std::uint32_t lidx(Lit l) {
    return 2 * (l.var() - 1) + (l.positive() ? 0u : 1u);
}
static Lit lit_of(std::uint32_t idx) {
    Var v = idx / 2 + 1;
    return (idx % 2 == 0) ? Lit::pos(v) : Lit::neg(v);
}

LiteralPartition::LiteralPartition(Var num_vars, std::vector<std::uint32_t> comp)
    : num_vars_(num_vars), comp_(std::move(comp)) {
    // Canonical rep per class: the literal of minimum index. Indices grow
    // with variable id, so this is the class's lowest variable in whichever
    // phase it occurs there (a satisfiable class holds one phase per var).
    std::uint32_t nclasses = 0;
    for (auto c : comp_) nclasses = std::max(nclasses, c + 1);
    std::vector<std::uint32_t> first(nclasses, UINT32_MAX);
    for (std::uint32_t i = 0; i < comp_.size(); ++i)
        first[comp_[i]] = std::min(first[comp_[i]], i);
    rep_.resize(comp_.size());
    for (std::uint32_t i = 0; i < comp_.size(); ++i)
        rep_[i] = lit_of(first[comp_[i]]);
}

std::uint32_t LiteralPartition::comp_of(Lit l) const { return comp_[lidx(l)]; }

Lit LiteralPartition::rep(Lit l) const { return rep_[lidx(l)]; }

std::vector<std::vector<Lit>> LiteralPartition::nontrivial_classes() const {
    std::uint32_t nclasses = 0;
    for (auto c : comp_) nclasses = std::max(nclasses, c + 1);
    std::vector<std::vector<Lit>> buckets(nclasses);
    for (std::uint32_t i = 0; i < comp_.size(); ++i)
        buckets[comp_[i]].push_back(lit_of(i));
    std::vector<std::vector<Lit>> out;
    for (auto& b : buckets)
        if (b.size() >= 2) {
            std::sort(b.begin(), b.end());
            out.push_back(std::move(b));
        }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

namespace {

// Iterative Tarjan over a CSR graph. Components are numbered in reverse
// topological order (edges run from higher comp ids to lower).
struct Tarjan {
    const std::vector<std::uint32_t>& head;
    const std::vector<std::uint32_t>& adj;
    std::vector<std::uint32_t> comp, low, num;
    std::vector<std::uint32_t> stack;
    std::vector<bool> on_stack;
    std::uint32_t counter = 0, ncomp = 0;

    explicit Tarjan(std::size_t n, const std::vector<std::uint32_t>& head_,
                    const std::vector<std::uint32_t>& adj_)
        : head(head_), adj(adj_), comp(n, UINT32_MAX), low(n, 0),
          num(n, UINT32_MAX), on_stack(n, false) {}

    void run(std::uint32_t root) {
        if (num[root] != UINT32_MAX) return;
        // frame: (vertex, next edge offset)
        std::vector<std::pair<std::uint32_t, std::uint32_t>> frames;
        frames.emplace_back(root, head[root]);
        num[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, e] = frames.back();
            if (e < head[v + 1]) {
                std::uint32_t w = adj[e++];
                if (num[w] == UINT32_MAX) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, head[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    std::uint32_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                    } while (w != v);
                    ++ncomp;
                }
                std::uint32_t child = v;
                frames.pop_back();
                if (!frames.empty()) {
                    auto& [p, pe] = frames.back();
                    (void)pe;
                    low[p] = std::min(low[p], low[child]);
                }
            }
        }
    }
};

} // namespace

TwoSatResult solve_2sat(const Formula& f) {
    if (f.max_width() > 2) throw WidthError("solve_2sat: clause width > 2");
    TwoSatResult res;
    Var n = f.num_vars();
    std::size_t nodes = 2 * static_cast<std::size_t>(n);

    if (f.has_empty_clause()) {
        res.sat = false;
        std::vector<std::uint32_t> comp(nodes);
        for (std::uint32_t i = 0; i < nodes; ++i) comp[i] = i;
        res.classes = LiteralPartition(n, std::move(comp));
        return res;
    }

    // implication edges: (a∨b) gives ~a→b and ~b→a; unit (a) gives ~a→a
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(2 * f.size());
    for (const auto& c : f.clauses()) {
        if (c.width() == 1) {
            Lit a = c.lits()[0];
            edges.emplace_back(lidx(~a), lidx(a));
        } else {
            Lit a = c.lits()[0], b = c.lits()[1];
            edges.emplace_back(lidx(~a), lidx(b));
            edges.emplace_back(lidx(~b), lidx(a));
        }
    }
    std::vector<std::uint32_t> head(nodes + 1, 0), adj(edges.size());
    for (const auto& [u, v] : edges) ++head[u + 1];
    for (std::size_t i = 1; i <= nodes; ++i) head[i] += head[i - 1];
    {
        std::vector<std::uint32_t> fill(head.begin(), head.end() - 1);
        for (const auto& [u, v] : edges) adj[fill[u]++] = v;
    }

    Tarjan t(nodes, head, adj);
    for (std::uint32_t v = 0; v < nodes; ++v) t.run(v);

    res.sat = true;
    for (Var v = 1; v <= n; ++v)
        if (t.comp[lidx(Lit::pos(v))] == t.comp[lidx(Lit::neg(v))]) {
            res.sat = false;
            break;
        }
    if (res.sat)
        // comp ids are reverse-topological: x is true iff comp[x] < comp[~x]
        for (Var v = 1; v <= n; ++v)
            res.model[v] = t.comp[lidx(Lit::pos(v))] < t.comp[lidx(Lit::neg(v))];
    res.classes = LiteralPartition(n, std::move(t.comp));
    return res;
}

} // namespace reenc
