#include "reenc/sprn.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace reenc {

namespace {
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

char pol_char(Pol p) {
    return p == Pol::Minus ? '-' : (p == Pol::Plus ? '+' : '.');
}

bool sorted_unique(const std::vector<Var>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}
} // namespace

void Prn::canonicalize() {
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    std::sort(aux.begin(), aux.end());
    aux.erase(std::unique(aux.begin(), aux.end()), aux.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Prn::is_base(Var v) const {
    return std::binary_search(base.begin(), base.end(), v);
}

bool Prn::is_aux(Var v) const {
    return std::binary_search(aux.begin(), aux.end(), v);
}

void Prn::validate() const {
    if (!sorted_unique(base)) throw DomainError("prn: base not sorted unique");
    if (!sorted_unique(aux)) throw DomainError("prn: aux not sorted unique");
    if ((!base.empty() && base.front() == 0) ||
        (!aux.empty() && aux.front() == 0))
        throw DomainError("prn: vertex ids are 1-based");
    {
        std::vector<Var> both;
        std::set_intersection(base.begin(), base.end(), aux.begin(), aux.end(),
                              std::back_inserter(both));
        if (!both.empty())
            throw DomainError("prn: vertex " + std::to_string(both.front()) +
                              " is both base and auxiliary");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const PolEdge& e = edges[i];
        if (i > 0) {
            const PolEdge& prev = edges[i - 1];
            if (!(prev < e))
                throw DomainError("prn: edges not sorted unique");
            if (prev.from == e.from && prev.to == e.to)
                throw DomainError("prn: duplicate edge " +
                                  std::to_string(e.from) + " -> " +
                                  std::to_string(e.to));
        }
        if (e.from == e.to)
            throw DomainError("prn: self-loop at " + std::to_string(e.from));
        if (!is_base(e.from) && !is_aux(e.from))
            throw DomainError("prn: unknown tail " + std::to_string(e.from));
        if (is_base(e.to)) {
            if (e.pol == Pol::None)
                throw DomainError("prn: edge into base " +
                                  std::to_string(e.to) + " has no polarity");
        } else if (is_aux(e.to)) {
            if (e.pol != Pol::None)
                throw DomainError("prn: edge into auxiliary " +
                                  std::to_string(e.to) + " has a polarity");
        } else {
            throw DomainError("prn: unknown head " + std::to_string(e.to));
        }
    }
}

Formula formula_of(const Prn& n) {
    n.validate();
    std::vector<Clause> cs;
    cs.reserve(n.edges.size());
    for (const auto& e : n.edges) {
        Lit head = e.pol == Pol::Minus ? Lit::neg(e.to) : Lit::pos(e.to);
        cs.push_back(binary(Lit::neg(e.from), head));
    }
    Var top = n.base.empty() ? 0 : n.base.back();
    if (!n.aux.empty()) top = std::max(top, n.aux.back());
    return Formula(std::move(cs), top);
}

Prn prn_of(const PolarizedDiagram& g) {
    Prn n;
    n.base = g.vertices;
    n.edges = g.edges;
    n.canonicalize();
    n.validate();
    return n;
}

std::string Walk::describe() const {
    std::string s = "[";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(path[i]);
    }
    s += ']';
    s += pol_char(sign);
    return s;
}

std::string StrictViolation::describe() const {
    if (kind == Kind::AuxOffWalk)
        return "auxiliary " + std::to_string(aux) + " lies on no valid walk";
    return "two walks join one base pair: " + first.describe() + " and " +
           second.describe();
}

std::string RealizeViolation::describe() const {
    std::string e = "(" + std::to_string(edge.from) + "," +
                    std::to_string(edge.to) + "," + pol_char(edge.pol) + ")";
    switch (kind) {
    case Kind::MissingEdge: return "no walk realizes edge " + e;
    case Kind::WrongSign:
        return "walk " + walk.describe() + " has the wrong sign for edge " + e;
    case Kind::SpuriousWalk:
        return "walk " + walk.describe() + " joins a non-adjacent pair";
    case Kind::SelfWalk:
        return "walk " + walk.describe() + " returns to its start";
    }
    return "";
}

namespace {

// Compact adjacency view of a network. Vertices are indexed by their rank in
// the merged base+aux id order.
struct Net {
    std::vector<Var> verts;
    std::vector<std::uint8_t> isaux;
    std::vector<std::uint32_t> ohead, oto, ihead, ifrom;
    std::vector<Pol> opol, ipol;

    std::uint32_t size() const {
        return static_cast<std::uint32_t>(verts.size());
    }
    std::uint32_t idx(Var v) const {
        return static_cast<std::uint32_t>(
            std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    }
};

Net build_net(const Prn& p) {
    Net g;
    g.verts.resize(p.base.size() + p.aux.size());
    std::merge(p.base.begin(), p.base.end(), p.aux.begin(), p.aux.end(),
               g.verts.begin());
    g.isaux.assign(g.verts.size(), 0);
    for (Var a : p.aux) g.isaux[g.idx(a)] = 1;

    std::uint32_t nv = g.size();
    std::uint32_t ne = static_cast<std::uint32_t>(p.edges.size());
    g.ohead.assign(nv + 1, 0);
    g.ihead.assign(nv + 1, 0);
    for (const auto& e : p.edges) {
        ++g.ohead[g.idx(e.from) + 1];
        ++g.ihead[g.idx(e.to) + 1];
    }
    for (std::uint32_t v = 0; v < nv; ++v) {
        g.ohead[v + 1] += g.ohead[v];
        g.ihead[v + 1] += g.ihead[v];
    }
    g.oto.resize(ne);
    g.opol.resize(ne);
    g.ifrom.resize(ne);
    g.ipol.resize(ne);
    std::vector<std::uint32_t> ocur(g.ohead.begin(), g.ohead.end() - 1);
    std::vector<std::uint32_t> icur(g.ihead.begin(), g.ihead.end() - 1);
    for (const auto& e : p.edges) {
        std::uint32_t u = g.idx(e.from), v = g.idx(e.to);
        g.oto[ocur[u]] = v;
        g.opol[ocur[u]++] = e.pol;
        g.ifrom[icur[v]] = u;
        g.ipol[icur[v]++] = e.pol;
    }
    return g;
}

// Forward reach: fwd[a] set when auxiliary a ends some edge path that starts
// at a base vertex and stays auxiliary afterwards. fpar is the auxiliary
// predecessor (kNone when entered straight from a base), forig that base.
void forward_reach(const Net& g, std::vector<std::uint8_t>& fwd,
                   std::vector<std::uint32_t>& fpar,
                   std::vector<std::uint32_t>& forig) {
    fwd.assign(g.size(), 0);
    fpar.assign(g.size(), kNone);
    forig.assign(g.size(), kNone);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < g.size(); ++u) {
        if (g.isaux[u]) continue;
        for (std::uint32_t k = g.ohead[u]; k < g.ohead[u + 1]; ++k) {
            std::uint32_t v = g.oto[k];
            if (g.isaux[v] && !fwd[v]) {
                fwd[v] = 1;
                forig[v] = u;
                queue.push_back(v);
            }
        }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        std::uint32_t a = queue[h];
        for (std::uint32_t k = g.ohead[a]; k < g.ohead[a + 1]; ++k) {
            std::uint32_t v = g.oto[k];
            if (g.isaux[v] && !fwd[v]) {
                fwd[v] = 1;
                fpar[v] = a;
                forig[v] = forig[a];
                queue.push_back(v);
            }
        }
    }
}

// Mirror image: bwd[a] set when a starts an all-auxiliary edge path into a
// base vertex; bnext chains towards it, bexit/bpol give the final hop.
void backward_reach(const Net& g, std::vector<std::uint8_t>& bwd,
                    std::vector<std::uint32_t>& bnext,
                    std::vector<std::uint32_t>& bexit, std::vector<Pol>& bpol) {
    bwd.assign(g.size(), 0);
    bnext.assign(g.size(), kNone);
    bexit.assign(g.size(), kNone);
    bpol.assign(g.size(), Pol::None);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < g.size(); ++u) {
        if (g.isaux[u]) continue;
        for (std::uint32_t k = g.ihead[u]; k < g.ihead[u + 1]; ++k) {
            std::uint32_t a = g.ifrom[k];
            if (g.isaux[a] && !bwd[a]) {
                bwd[a] = 1;
                bexit[a] = u;
                bpol[a] = g.ipol[k];
                queue.push_back(a);
            }
        }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
        std::uint32_t a = queue[h];
        for (std::uint32_t k = g.ihead[a]; k < g.ihead[a + 1]; ++k) {
            std::uint32_t t = g.ifrom[k];
            if (g.isaux[t] && !bwd[t]) {
                bwd[t] = 1;
                bnext[t] = a;
                queue.push_back(t);
            }
        }
    }
}

// Path base ⇝ a along forward-reach parents, as vertex ids.
std::vector<Var> prefix_path(const Net& g, const std::vector<std::uint32_t>& fpar,
                             const std::vector<std::uint32_t>& forig,
                             std::uint32_t a) {
    std::vector<Var> rev;
    std::uint32_t cur = a;
    while (cur != kNone) {
        rev.push_back(g.verts[cur]);
        cur = fpar[cur];
    }
    rev.push_back(g.verts[forig[a]]);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

// Path a ⇝ base along backward-reach links; sign of its last edge via bpol.
std::pair<std::vector<Var>, Pol> suffix_path(const Net& g,
                                             const std::vector<std::uint32_t>& bnext,
                                             const std::vector<std::uint32_t>& bexit,
                                             const std::vector<Pol>& bpol,
                                             std::uint32_t a) {
    std::vector<Var> path;
    std::uint32_t cur = a;
    while (bnext[cur] != kNone) {
        path.push_back(g.verts[cur]);
        cur = bnext[cur];
    }
    path.push_back(g.verts[cur]);
    path.push_back(g.verts[bexit[cur]]);
    return {path, bpol[cur]};
}

// Up to `limit` walks from base s to base t (s == t gives self-walks).
// Requires an acyclic auxiliary subgraph.
void collect_walks(const Net& g, std::uint32_t s, std::uint32_t t,
                   std::size_t limit, std::vector<Walk>& out) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
    std::vector<std::uint32_t> path{s};
    stack.emplace_back(s, g.ohead[s]);
    while (!stack.empty() && out.size() < limit) {
        auto& [v, cur] = stack.back();
        if (cur == g.ohead[v + 1]) {
            stack.pop_back();
            path.pop_back();
            continue;
        }
        std::uint32_t k = cur++;
        std::uint32_t w = g.oto[k];
        if (!g.isaux[w]) {
            if (w == t) {
                Walk walk;
                walk.path.reserve(path.size() + 1);
                for (std::uint32_t x : path) walk.path.push_back(g.verts[x]);
                walk.path.push_back(g.verts[w]);
                walk.sign = g.opol[k];
                out.push_back(std::move(walk));
            }
        } else {
            path.push_back(w);
            stack.emplace_back(w, g.ohead[w]);
        }
    }
}

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

std::vector<Walk> all_valid_walks(const Prn& p) {
    p.validate();
    Net g = build_net(p);
    std::vector<Walk> out;
    std::vector<std::uint8_t> onpath(g.size(), 0);
    for (std::uint32_t s = 0; s < g.size(); ++s) {
        if (g.isaux[s]) continue;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
        std::vector<std::uint32_t> path{s};
        stack.emplace_back(s, g.ohead[s]);
        while (!stack.empty()) {
            auto& [v, cur] = stack.back();
            if (cur == g.ohead[v + 1]) {
                if (g.isaux[v]) onpath[v] = 0;
                stack.pop_back();
                path.pop_back();
                continue;
            }
            std::uint32_t k = cur++;
            std::uint32_t w = g.oto[k];
            if (!g.isaux[w]) {
                Walk walk;
                for (std::uint32_t x : path) walk.path.push_back(g.verts[x]);
                walk.path.push_back(g.verts[w]);
                walk.sign = g.opol[k];
                out.push_back(std::move(walk));
            } else if (onpath[w]) {
                std::vector<unsigned> cyc;
                bool in = false;
                for (std::uint32_t x : path) {
                    if (x == w) in = true;
                    if (in) cyc.push_back(g.verts[x]);
                }
                cyc.push_back(g.verts[w]);
                throw CycleError("walk enumeration does not terminate: "
                                 "auxiliary cycle",
                                 std::move(cyc));
            } else {
                onpath[w] = 1;
                path.push_back(w);
                stack.emplace_back(w, g.ohead[w]);
            }
        }
    }
    return out;
}

std::optional<StrictViolation> check_strict(const Prn& p) {
    p.validate();
    Net g = build_net(p);

    std::vector<std::uint8_t> fwd, bwd;
    std::vector<std::uint32_t> fpar, forig, bnext, bexit;
    std::vector<Pol> bpol;
    forward_reach(g, fwd, fpar, forig);
    backward_reach(g, bwd, bnext, bexit, bpol);

    for (std::uint32_t a = 0; a < g.size(); ++a) {
        if (!g.isaux[a]) continue;
        if (!fwd[a] || !bwd[a]) {
            StrictViolation v;
            v.kind = StrictViolation::Kind::AuxOffWalk;
            v.aux = g.verts[a];
            return v;
        }
    }

    // topological order of the auxiliary subgraph, minimum id first
    std::vector<std::uint32_t> indeg(g.size(), 0);
    std::uint32_t naux = 0;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        if (!g.isaux[v]) continue;
        ++naux;
        for (std::uint32_t k = g.ihead[v]; k < g.ihead[v + 1]; ++k)
            if (g.isaux[g.ifrom[k]]) ++indeg[v];
    }
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>,
                        std::greater<std::uint32_t>>
        ready;
    for (std::uint32_t v = 0; v < g.size(); ++v)
        if (g.isaux[v] && indeg[v] == 0) ready.push(v);
    std::vector<std::uint32_t> topo;
    topo.reserve(naux);
    std::vector<std::uint8_t> done(g.size(), 0);
    while (!ready.empty()) {
        std::uint32_t v = ready.top();
        ready.pop();
        topo.push_back(v);
        done[v] = 1;
        for (std::uint32_t k = g.ohead[v]; k < g.ohead[v + 1]; ++k) {
            std::uint32_t w = g.oto[k];
            if (g.isaux[w] && --indeg[w] == 0) ready.push(w);
        }
    }

    if (topo.size() < naux) {
        // Some auxiliary cycle, and every auxiliary is live, so one base
        // pair is joined by walks of every length: exhibit two around the
        // cycle.
        std::uint32_t start = kNone;
        for (std::uint32_t v = 0; v < g.size(); ++v)
            if (g.isaux[v] && !done[v]) {
                start = v;
                break;
            }
        std::vector<std::uint32_t> trail;
        std::unordered_map<std::uint32_t, std::size_t> seen;
        std::uint32_t cur = start;
        while (!seen.count(cur)) {
            seen[cur] = trail.size();
            trail.push_back(cur);
            std::uint32_t prev = kNone;
            for (std::uint32_t k = g.ihead[cur]; k < g.ihead[cur + 1]; ++k) {
                std::uint32_t t = g.ifrom[k];
                if (g.isaux[t] && !done[t] && t < prev) prev = t;
            }
            cur = prev;
        }
        // trail[i+1] -> trail[i] are edges; cur repeats at trail[seen[cur]]
        std::vector<Var> loop{g.verts[cur]};
        for (std::size_t i = trail.size(); i-- > seen[cur] + 1;)
            loop.push_back(g.verts[trail[i]]);
        loop.push_back(g.verts[cur]);

        auto pre = prefix_path(g, fpar, forig, cur);
        auto [suf, sign] = suffix_path(g, bnext, bexit, bpol, cur);
        StrictViolation v;
        v.kind = StrictViolation::Kind::TwoWalks;
        v.first.path = pre;
        v.first.path.insert(v.first.path.end(), suf.begin() + 1, suf.end());
        v.first.sign = sign;
        v.second.path = pre;
        v.second.path.insert(v.second.path.end(), loop.begin() + 1, loop.end());
        v.second.path.insert(v.second.path.end(), suf.begin() + 1, suf.end());
        v.second.sign = sign;
        return v;
    }

    // endpoint lists per auxiliary, successors first
    std::vector<std::vector<std::pair<std::uint32_t, Pol>>> endlist(g.size());
    for (std::size_t i = topo.size(); i-- > 0;) {
        std::uint32_t a = topo[i];
        auto& list = endlist[a];
        for (std::uint32_t k = g.ohead[a]; k < g.ohead[a + 1]; ++k) {
            std::uint32_t w = g.oto[k];
            if (!g.isaux[w])
                list.emplace_back(w, g.opol[k]);
            else
                list.insert(list.end(), endlist[w].begin(), endlist[w].end());
        }
        std::sort(list.begin(), list.end());
        for (std::size_t j = 1; j < list.size(); ++j) {
            if (list[j - 1].first != list[j].first) continue;
            // two walk suffixes from a to one base vertex; a is live, so a
            // base vertex reaches a and the pair gets two walks
            std::vector<Walk> sufs;
            {
                // reuse the generic collector by faking a one-off start: walk
                // suffixes from a are exactly walks collected from a if a were
                // base, so descend manually
                std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
                std::vector<std::uint32_t> path{a};
                stack.emplace_back(a, g.ohead[a]);
                std::uint32_t t = list[j].first;
                while (!stack.empty() && sufs.size() < 2) {
                    auto& [x, cur2] = stack.back();
                    if (cur2 == g.ohead[x + 1]) {
                        stack.pop_back();
                        path.pop_back();
                        continue;
                    }
                    std::uint32_t k2 = cur2++;
                    std::uint32_t w2 = g.oto[k2];
                    if (!g.isaux[w2]) {
                        if (w2 == t) {
                            Walk walk;
                            for (std::uint32_t y : path)
                                walk.path.push_back(g.verts[y]);
                            walk.path.push_back(g.verts[w2]);
                            walk.sign = g.opol[k2];
                            sufs.push_back(std::move(walk));
                        }
                    } else {
                        path.push_back(w2);
                        stack.emplace_back(w2, g.ohead[w2]);
                    }
                }
            }
            auto pre = prefix_path(g, fpar, forig, a);
            StrictViolation v;
            v.kind = StrictViolation::Kind::TwoWalks;
            v.first.path = pre;
            v.first.path.insert(v.first.path.end(), sufs[0].path.begin() + 1,
                                sufs[0].path.end());
            v.first.sign = sufs[0].sign;
            v.second.path = pre;
            v.second.path.insert(v.second.path.end(), sufs[1].path.begin() + 1,
                                 sufs[1].path.end());
            v.second.sign = sufs[1].sign;
            return v;
        }
    }

    // one key per walk, normalized to the unordered base pair
    std::vector<std::uint64_t> pairs;
    for (std::uint32_t u = 0; u < g.size(); ++u) {
        if (g.isaux[u]) continue;
        for (std::uint32_t k = g.ohead[u]; k < g.ohead[u + 1]; ++k) {
            std::uint32_t w = g.oto[k];
            if (!g.isaux[w])
                pairs.push_back(pair_key(std::min(u, w), std::max(u, w)));
            else
                for (const auto& end : endlist[w])
                    pairs.push_back(pair_key(std::min(u, end.first),
                                             std::max(u, end.first)));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i - 1] != pairs[i]) continue;
        std::uint32_t u = static_cast<std::uint32_t>(pairs[i] >> 32);
        std::uint32_t w = static_cast<std::uint32_t>(pairs[i]);
        std::vector<Walk> ws;
        collect_walks(g, u, w, 2, ws);
        if (ws.size() < 2 && u != w) collect_walks(g, w, u, 2, ws);
        StrictViolation v;
        v.kind = StrictViolation::Kind::TwoWalks;
        v.first = ws[0];
        v.second = ws[1];
        return v;
    }
    return std::nullopt;
}

std::optional<RealizeViolation> check_realizes(const Prn& p,
                                               const PolarizedDiagram& d) {
    p.validate();
    if (d.vertices != p.base)
        throw DomainError("check_realizes: diagram vertices differ from the "
                          "network base");
    Net g = build_net(p);

    // diagram adjacency per base index, targets ascending
    std::vector<std::vector<std::pair<std::uint32_t, Pol>>> want(g.size());
    for (const auto& e : d.edges) {
        if (e.pol == Pol::None)
            throw DomainError("check_realizes: diagram edge without polarity");
        if (!p.is_base(e.from) || !p.is_base(e.to) || e.from == e.to)
            throw DomainError("check_realizes: bad diagram edge");
        want[g.idx(e.from)].emplace_back(g.idx(e.to), e.pol);
    }
    for (auto& w : want) std::sort(w.begin(), w.end());

    std::vector<std::uint8_t> reach(g.size(), 0);
    std::vector<std::uint32_t> par(g.size(), kNone), touched, queue;
    // facts: one walk u ⇝ target per final edge, tail kNone for direct edges
    std::vector<std::tuple<std::uint32_t, Pol, std::uint32_t>> facts;

    auto walk_of = [&](std::uint32_t u, std::uint32_t target, Pol s,
                       std::uint32_t tail) {
        Walk w;
        if (tail == kNone) {
            w.path = {g.verts[u], g.verts[target]};
        } else {
            std::vector<Var> rev;
            std::uint32_t cur = tail;
            while (cur != kNone) {
                rev.push_back(g.verts[cur]);
                cur = par[cur];
            }
            rev.push_back(g.verts[u]);
            std::reverse(rev.begin(), rev.end());
            w.path = std::move(rev);
            w.path.push_back(g.verts[target]);
        }
        w.sign = s;
        return w;
    };

    for (std::uint32_t u = 0; u < g.size(); ++u) {
        if (g.isaux[u]) continue;
        touched.clear();
        queue.clear();
        facts.clear();
        for (std::uint32_t k = g.ohead[u]; k < g.ohead[u + 1]; ++k) {
            std::uint32_t w = g.oto[k];
            if (!g.isaux[w]) {
                facts.emplace_back(w, g.opol[k], kNone);
            } else if (!reach[w]) {
                reach[w] = 1;
                par[w] = kNone;
                queue.push_back(w);
                touched.push_back(w);
            }
        }
        for (std::size_t h = 0; h < queue.size(); ++h) {
            std::uint32_t a = queue[h];
            for (std::uint32_t k = g.ohead[a]; k < g.ohead[a + 1]; ++k) {
                std::uint32_t w = g.oto[k];
                if (g.isaux[w]) {
                    if (!reach[w]) {
                        reach[w] = 1;
                        par[w] = a;
                        queue.push_back(w);
                        touched.push_back(w);
                    }
                } else {
                    facts.emplace_back(w, g.opol[k], a);
                }
            }
        }
        std::sort(facts.begin(), facts.end());

        // merge walk facts with expected edges, targets ascending
        const auto& exp = want[u];
        std::size_t fi = 0, ei = 0;
        while (fi < facts.size() || ei < exp.size()) {
            std::uint32_t fv = fi < facts.size()
                                   ? std::get<0>(facts[fi])
                                   : kNone;
            std::uint32_t ev = ei < exp.size() ? exp[ei].first : kNone;
            if (fv < ev) {
                auto [v, s, tail] = facts[fi];
                RealizeViolation r;
                r.kind = v == u ? RealizeViolation::Kind::SelfWalk
                                : RealizeViolation::Kind::SpuriousWalk;
                r.walk = walk_of(u, v, s, tail);
                return r;
            }
            if (ev < fv) {
                RealizeViolation r;
                r.kind = RealizeViolation::Kind::MissingEdge;
                r.edge = {g.verts[u], g.verts[ev], exp[ei].second};
                return r;
            }
            // same target: every walk must carry the edge sign
            Pol s = exp[ei].second;
            while (fi < facts.size() && std::get<0>(facts[fi]) == fv) {
                if (std::get<1>(facts[fi]) != s) {
                    RealizeViolation r;
                    r.kind = RealizeViolation::Kind::WrongSign;
                    r.edge = {g.verts[u], g.verts[fv], s};
                    r.walk = walk_of(u, fv, std::get<1>(facts[fi]),
                                     std::get<2>(facts[fi]));
                    return r;
                }
                ++fi;
            }
            ++ei;
        }
        for (std::uint32_t a : touched) reach[a] = 0;
    }
    return std::nullopt;
}

Prn reduce_biclique(const Prn& n, const std::vector<Var>& xs,
                    const std::vector<Var>& ys, Var fresh) {
    n.validate();
    if (xs.empty() || ys.empty())
        throw NotCoherentBicliqueError("reduce_biclique: empty side");
    std::vector<Var> sx(xs), sy(ys);
    std::sort(sx.begin(), sx.end());
    sx.erase(std::unique(sx.begin(), sx.end()), sx.end());
    std::sort(sy.begin(), sy.end());
    sy.erase(std::unique(sy.begin(), sy.end()), sy.end());
    if (fresh == 0 || n.is_base(fresh) || n.is_aux(fresh))
        throw DomainError("reduce_biclique: fresh id already in use");
    for (Var v : sx)
        if (!n.is_base(v) && !n.is_aux(v))
            throw DomainError("reduce_biclique: unknown vertex " +
                              std::to_string(v));
    for (Var v : sy)
        if (!n.is_base(v) && !n.is_aux(v))
            throw DomainError("reduce_biclique: unknown vertex " +
                              std::to_string(v));

    std::unordered_map<std::uint64_t, Pol> emap;
    emap.reserve(n.edges.size() * 2);
    for (const auto& e : n.edges)
        emap.emplace((static_cast<std::uint64_t>(e.from) << 32) | e.to, e.pol);

    std::vector<Pol> head_pol(sy.size(), Pol::None);
    for (std::size_t j = 0; j < sy.size(); ++j) {
        bool first = true;
        for (Var x : sx) {
            auto it = emap.find((static_cast<std::uint64_t>(x) << 32) | sy[j]);
            if (it == emap.end())
                throw NotCoherentBicliqueError(
                    "reduce_biclique: edge " + std::to_string(x) + " -> " +
                    std::to_string(sy[j]) + " is absent");
            if (first) {
                head_pol[j] = it->second;
                first = false;
            } else if (it->second != head_pol[j]) {
                throw NotCoherentBicliqueError(
                    "reduce_biclique: polarity differs at head " +
                    std::to_string(sy[j]));
            }
        }
    }

    Prn r;
    r.base = n.base;
    r.aux = n.aux;
    r.aux.push_back(fresh);
    r.edges.reserve(n.edges.size() + sx.size() + sy.size());
    for (const auto& e : n.edges) {
        bool inside = std::binary_search(sx.begin(), sx.end(), e.from) &&
                      std::binary_search(sy.begin(), sy.end(), e.to);
        if (!inside) r.edges.push_back(e);
    }
    for (Var x : sx) r.edges.push_back({x, fresh, Pol::None});
    for (std::size_t j = 0; j < sy.size(); ++j)
        r.edges.push_back({fresh, sy[j], head_pol[j]});
    r.canonicalize();
    r.validate();
    return r;
}

Prn contract_unit_degree(const Prn& n) {
    n.validate();
    Prn r = n;
    for (;;) {
        std::unordered_map<Var, std::pair<std::uint32_t, std::uint32_t>> deg;
        for (Var a : r.aux) deg[a] = {0, 0};
        for (const auto& e : r.edges) {
            auto it = deg.find(e.to);
            if (it != deg.end()) ++it->second.first;
            it = deg.find(e.from);
            if (it != deg.end()) ++it->second.second;
        }
        Var pick = 0;
        for (Var a : r.aux) {
            auto [in, out] = deg[a];
            if (in == 1 || out == 1) {
                pick = a;
                break;
            }
        }
        if (pick == 0) break;

        std::vector<PolEdge> ins, outs, rest;
        for (const auto& e : r.edges) {
            if (e.to == pick)
                ins.push_back(e);
            else if (e.from == pick)
                outs.push_back(e);
            else
                rest.push_back(e);
        }
        std::vector<PolEdge> spliced;
        for (const auto& in : ins)
            for (const auto& out : outs)
                spliced.push_back({in.from, out.to, out.pol});
        for (const auto& e : spliced) {
            if (e.from == e.to)
                throw DomainError("contract_unit_degree: splice would close "
                                  "a loop at " + std::to_string(e.from));
            for (const auto& h : rest)
                if (h.from == e.from && h.to == e.to && h.pol != e.pol)
                    throw DomainError("contract_unit_degree: splice clashes "
                                      "with edge " + std::to_string(e.from) +
                                      " -> " + std::to_string(e.to));
        }
        rest.insert(rest.end(), spliced.begin(), spliced.end());
        r.edges = std::move(rest);
        r.aux.erase(std::find(r.aux.begin(), r.aux.end(), pick));
        r.canonicalize();
    }
    r.validate();
    return r;
}

std::string to_dot(const Prn& n) {
    std::ostringstream os;
    os << "digraph prn {\n  rankdir=LR;\n";
    for (Var b : n.base)
        os << "  v" << b << " [shape=box label=\"" << b << "\"];\n";
    for (Var a : n.aux)
        os << "  v" << a << " [shape=circle label=\"" << a << "\"];\n";
    for (const auto& e : n.edges) {
        os << "  v" << e.from << " -> v" << e.to;
        if (e.pol == Pol::Minus)
            os << " [style=dashed label=\"-\"]";
        else if (e.pol == Pol::Plus)
            os << " [label=\"+\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace reenc
