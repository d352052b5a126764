#include "reenc/construct.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>

#include "reenc/errors.hpp"
#include "reenc/simplify.hpp"

namespace reenc {

namespace {

NechiporukParams schedule(std::size_t n, double base) {
    NechiporukParams p;
    if (n < 3) return p;
    const double l = std::log(static_cast<double>(n)) / std::log(base);
    const double q = static_cast<double>(n) / (l * l);
    const double r = l - 3.0 * (std::log(l) / std::log(base));
    if (q >= 1.0) p.q = static_cast<std::size_t>(q);
    if (r >= 1.0) p.r = static_cast<std::size_t>(r);
    return p;
}

} // namespace

NechiporukParams NechiporukParams::for_undirected(std::size_t n) {
    return schedule(n, 2.0);
}

NechiporukParams NechiporukParams::for_general(std::size_t n) {
    return schedule(n, 3.0);
}

namespace {

// Adjacency in order-position space, prepared once and shared by every
// sweep candidate. Heads ascend within each tail row.
struct EngineInput {
    std::vector<Var> order;
    std::vector<std::uint32_t> start; // CSR row offsets, size n+1
    std::vector<std::uint32_t> head;  // head positions
    std::vector<Pol> pol;
};

EngineInput prepare(const PolarizedDiagram& g, const std::vector<Var>& order) {
    EngineInput in;
    in.order = order;
    const std::size_t n = order.size();

    std::unordered_map<Var, std::uint32_t> pos;
    pos.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<std::uint32_t>(i);

    struct E {
        std::uint32_t tp, hp;
        Pol pol;
    };
    std::vector<E> es;
    es.reserve(g.edges.size());
    for (const PolEdge& e : g.edges) {
        const std::uint32_t tp = pos.at(e.from), hp = pos.at(e.to);
        if (tp >= hp) throw DomainError("construction needs edges forward in the order");
        es.push_back({tp, hp, e.pol});
    }
    std::sort(es.begin(), es.end(), [](const E& a, const E& b) {
        return a.tp != b.tp ? a.tp < b.tp : a.hp < b.hp;
    });

    in.start.assign(n + 1, 0);
    for (const E& e : es) ++in.start[e.tp + 1];
    for (std::size_t i = 0; i < n; ++i) in.start[i + 1] += in.start[i];
    in.head.reserve(es.size());
    in.pol.reserve(es.size());
    for (const E& e : es) {
        in.head.push_back(e.hp);
        in.pol.push_back(e.pol);
    }
    return in;
}

// One candidate build. Tails with the same edge pattern into a part share a
// pattern vertex y; within a block, tails of a class pair up through a
// reusable pair vertex z. Aborts (nullopt) once the edge count reaches
// `budget`, since it can no longer improve on the incumbent.
std::optional<Prn> block_engine(const EngineInput& in, std::size_t q,
                                std::size_t r, Var first_aux,
                                std::size_t budget) {
    const std::size_t n = in.order.size();
    if (q < 1) q = 1;
    if (r < 1) r = 1;
    if (r > 32) r = 32;
    const std::size_t nparts = (n + r - 1) / r;

    std::vector<PolEdge> out;
    auto over = [&]() { return out.size() >= budget; };

    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> bucket(nparts);
    for (std::uint32_t tp = 0; tp < n; ++tp) {
        const std::size_t mp = tp / r;
        std::uint32_t i = in.start[tp];
        const std::uint32_t end = in.start[tp + 1];
        while (i < end) {
            const std::size_t part = in.head[i] / r;
            const std::uint32_t ps = static_cast<std::uint32_t>(part * r);
            std::uint64_t sig = 0;
            std::uint32_t j = i;
            for (; j < end && in.head[j] / r == part; ++j) {
                const std::uint64_t code = in.pol[j] == Pol::Minus ? 1 : 2;
                sig |= code << (2 * (in.head[j] - ps));
            }
            if (part == mp) {
                for (std::uint32_t t = i; t < j; ++t)
                    out.push_back({in.order[tp], in.order[in.head[t]], in.pol[t]});
            } else {
                bucket[part].emplace_back(tp, sig);
            }
            i = j;
        }
        if (over()) return std::nullopt;
    }

    Var next = first_aux;
    std::vector<Var> auxlist;
    std::unordered_map<std::uint64_t, Var> zmap;

    for (std::size_t p = 0; p < nparts; ++p) {
        if (bucket[p].empty()) continue;
        const std::uint32_t ps = static_cast<std::uint32_t>(p * r);
        const std::uint32_t pe = static_cast<std::uint32_t>(std::min(p * r + r, n));

        std::unordered_map<std::uint64_t, std::uint32_t> cls;
        cls.reserve(bucket[p].size() * 2);
        std::vector<std::uint64_t> sigs;
        std::vector<std::vector<std::uint32_t>> members;
        for (const auto& [tp, sig] : bucket[p]) {
            auto [it, fresh] = cls.try_emplace(sig, static_cast<std::uint32_t>(sigs.size()));
            if (fresh) {
                sigs.push_back(sig);
                members.emplace_back();
            }
            members[it->second].push_back(tp);
        }

        for (std::size_t ci = 0; ci < sigs.size(); ++ci) {
            const std::uint64_t sig = sigs[ci];
            const auto& mem = members[ci];
            if (mem.size() == 1) {
                for (std::uint32_t hp = ps; hp < pe; ++hp) {
                    const std::uint64_t code = (sig >> (2 * (hp - ps))) & 3;
                    if (code)
                        out.push_back({in.order[mem[0]], in.order[hp],
                                       code == 1 ? Pol::Minus : Pol::Plus});
                }
                continue;
            }
            const Var y = next++;
            auxlist.push_back(y);
            for (std::uint32_t hp = ps; hp < pe; ++hp) {
                const std::uint64_t code = (sig >> (2 * (hp - ps))) & 3;
                if (code)
                    out.push_back({y, in.order[hp], code == 1 ? Pol::Minus : Pol::Plus});
            }
            std::size_t i = 0;
            while (i < mem.size()) {
                const std::size_t b = mem[i] / q;
                std::size_t j = i;
                while (j < mem.size() && mem[j] / q == b) ++j;
                std::size_t t = i;
                for (; t + 1 < j; t += 2) {
                    const std::uint64_t key =
                        (static_cast<std::uint64_t>(mem[t]) << 32) | mem[t + 1];
                    auto [zit, zfresh] = zmap.try_emplace(key, 0);
                    if (zfresh) {
                        zit->second = next++;
                        auxlist.push_back(zit->second);
                        out.push_back({in.order[mem[t]], zit->second, Pol::None});
                        out.push_back({in.order[mem[t + 1]], zit->second, Pol::None});
                    }
                    out.push_back({zit->second, y, Pol::None});
                }
                if (t < j) out.push_back({in.order[mem[t]], y, Pol::None});
                i = j;
            }
        }
        if (over()) return std::nullopt;
    }

    Prn net;
    net.base = in.order;
    std::sort(net.base.begin(), net.base.end());
    net.aux = std::move(auxlist);
    net.edges = std::move(out);
    net.canonicalize();
    return net;
}

// Best network over the part-length candidates: the scheduled value plus
// every r in 2..floor(lg n), against the zero-auxiliary direct network.
Prn sweep_networks(const PolarizedDiagram& g, const std::vector<Var>& order,
                   const NechiporukParams& ps, Var first_aux) {
    Prn best = prn_of(g);
    if (order.size() < 2 || g.edges.empty()) return best;
    std::size_t best_edges = best.edges.size();

    const EngineInput in = prepare(g, order);
    std::size_t lg = 0;
    while ((std::size_t{2} << lg) <= order.size()) ++lg;

    std::vector<std::size_t> cands;
    cands.push_back(std::min<std::size_t>(std::max<std::size_t>(ps.r, 1), 32));
    for (std::size_t r = 2; r <= lg && r <= 32; ++r)
        if (r != cands[0]) cands.push_back(r);

    for (std::size_t r : cands) {
        auto cand = block_engine(in, ps.q, r, first_aux, best_edges);
        if (cand && cand->edges.size() < best_edges) {
            best = std::move(*cand);
            best_edges = best.edges.size();
        }
    }
    return best;
}

void require_fresh_range(const std::vector<Var>& vs, Var first_aux) {
    if (first_aux == 0) throw DomainError("auxiliary range starts at 0");
    if (!vs.empty() && first_aux <= vs.back())
        throw DomainError("auxiliary range overlaps the vertices");
}

} // namespace

Prn nechiporuk_undirected(const Diagram& d, Var first_aux) {
    if (!d.directed.empty())
        throw MixedEdgesError("nechiporuk_undirected: diagram has directed edges");
    require_fresh_range(d.vertices, first_aux);
    const PolarizedDiagram g = polarize(d, d.vertices);
    Prn net = sweep_networks(g, d.vertices, NechiporukParams::for_undirected(d.vertices.size()),
                             first_aux);
    net.validate();
    return net;
}

Prn nechiporuk_general(const Diagram& d, Var first_aux) {
    require_fresh_range(d.vertices, first_aux);
    const std::vector<Var> order = topo_order(d);
    const PolarizedDiagram g = polarize(d, order);
    Prn net = sweep_networks(g, order, NechiporukParams::for_general(d.vertices.size()),
                             first_aux);
    net.validate();
    return net;
}

namespace {

std::vector<Var> clause_vars(const std::vector<Clause>& cs) {
    std::vector<Var> vs;
    vs.reserve(cs.size() * 2);
    for (const Clause& c : cs)
        for (Lit l : c.lits()) vs.push_back(l.var());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

// Append a network's formula, optionally flipping the polarity of base
// variables (the positive-fragment trick), and advance the auxiliary range.
void append_network(const Prn& net, bool flip_base, std::vector<Clause>& out,
                    std::set<Var>& aux, Var& next) {
    for (Var a : net.aux) aux.insert(a);
    if (!net.aux.empty()) next = net.aux.back() + 1;
    const Formula enc = formula_of(net);
    for (const Clause& c : enc.clauses()) {
        if (!flip_base) {
            out.push_back(c);
            continue;
        }
        std::vector<Lit> ls;
        ls.reserve(c.width());
        for (Lit l : c.lits()) {
            const bool is_base = std::binary_search(net.base.begin(), net.base.end(), l.var());
            ls.push_back(is_base ? ~l : l);
        }
        out.push_back(Clause(ls));
    }
}

} // namespace

Reencoding reencode_general(const Formula& f, Var first_aux) {
    for (const Clause& c : f.clauses())
        if (c.width() != 2) throw WidthError("reencode_general: clause width is not 2");
    if (first_aux == 0 || first_aux <= f.num_vars())
        throw DomainError("reencode_general: auxiliary range overlaps the input");

    std::vector<Clause> negneg, pospos, fwd, rev;
    for (const Clause& c : f.clauses()) {
        const Lit lo = c.lits()[0], hi = c.lits()[1];
        if (!lo.positive() && !hi.positive())
            negneg.push_back(c);
        else if (lo.positive() && hi.positive())
            pospos.push_back(c);
        else if (!lo.positive())
            fwd.push_back(c);
        else
            rev.push_back(c);
    }

    std::vector<Clause> out;
    std::set<Var> aux;
    Var next = first_aux;

    auto encode_undirected = [&](const std::vector<Clause>& cs, bool flip) {
        if (cs.empty()) return;
        Diagram d;
        d.vertices = clause_vars(cs);
        d.undirected.reserve(cs.size());
        for (const Clause& c : cs)
            d.undirected.emplace_back(c.lits()[0].var(), c.lits()[1].var());
        std::sort(d.undirected.begin(), d.undirected.end());
        const PolarizedDiagram g = polarize(d, d.vertices);
        Prn net = sweep_networks(g, d.vertices,
                                 NechiporukParams::for_undirected(d.vertices.size()), next);
        append_network(net, flip, out, aux, next);
    };

    auto encode_plus = [&](const std::vector<Clause>& cs, bool descending) {
        if (cs.empty()) return;
        PolarizedDiagram g;
        g.vertices = clause_vars(cs);
        g.edges.reserve(cs.size());
        for (const Clause& c : cs) {
            const Var lo = c.lits()[0].var(), hi = c.lits()[1].var();
            if (descending)
                g.edges.push_back({hi, lo, Pol::Plus});
            else
                g.edges.push_back({lo, hi, Pol::Plus});
        }
        std::sort(g.edges.begin(), g.edges.end());
        std::vector<Var> order = g.vertices;
        if (descending) std::reverse(order.begin(), order.end());
        Prn net = sweep_networks(g, order,
                                 NechiporukParams::for_undirected(g.vertices.size()), next);
        append_network(net, false, out, aux, next);
    };

    encode_undirected(negneg, false);
    encode_undirected(pospos, true);
    encode_plus(fwd, false);
    encode_plus(rev, true);

    Var declared = f.num_vars();
    if (next > first_aux) declared = std::max(declared, static_cast<Var>(next - 1));
    return {Formula(std::move(out), declared), std::move(aux)};
}

Prn amo_ladder_net(const std::vector<Var>& xs, Var first_aux) {
    const std::size_t n = xs.size();
    if (n == 0) throw DomainError("amo_ladder_net: no variables");
    std::vector<Var> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("amo_ladder_net: repeated variable");
    require_fresh_range(sorted, first_aux);

    Prn net;
    net.base = sorted;
    auto X = [&](std::size_t i) { return xs[i - 1]; };

    if (n <= 4) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                net.edges.push_back({xs[i], xs[j], Pol::Minus});
        net.canonicalize();
        net.validate();
        return net;
    }

    const std::size_t K = (n - 3) / 2;
    auto Y = [&](std::size_t k) { return first_aux + static_cast<Var>(k) - 1; };
    for (std::size_t k = 1; k <= K; ++k) net.aux.push_back(Y(k));

    net.edges.push_back({X(1), X(2), Pol::Minus});
    net.edges.push_back({X(1), X(3), Pol::Minus});
    net.edges.push_back({X(2), X(3), Pol::Minus});
    net.edges.push_back({X(1), Y(1), Pol::None});
    net.edges.push_back({X(2), Y(1), Pol::None});
    net.edges.push_back({X(3), Y(1), Pol::None});

    for (std::size_t k = 1; k + 1 <= K; ++k) {
        const Var a = X(2 * k + 2), b = X(2 * k + 3);
        net.edges.push_back({Y(k), a, Pol::Minus});
        net.edges.push_back({Y(k), b, Pol::Minus});
        net.edges.push_back({a, b, Pol::Minus});
        net.edges.push_back({a, Y(k + 1), Pol::None});
        net.edges.push_back({b, Y(k + 1), Pol::None});
        net.edges.push_back({Y(k), Y(k + 1), Pol::None});
    }

    if (n % 2 == 1) {
        const Var a = X(2 * K + 2), b = X(2 * K + 3);
        net.edges.push_back({Y(K), a, Pol::Minus});
        net.edges.push_back({Y(K), b, Pol::Minus});
        net.edges.push_back({a, b, Pol::Minus});
    } else {
        const Var a = X(2 * K + 2), b = X(2 * K + 3), c = X(2 * K + 4);
        net.edges.push_back({Y(K), a, Pol::Minus});
        net.edges.push_back({Y(K), b, Pol::Minus});
        net.edges.push_back({Y(K), c, Pol::Minus});
        net.edges.push_back({a, b, Pol::Minus});
        net.edges.push_back({a, c, Pol::Minus});
        net.edges.push_back({b, c, Pol::Minus});
    }

    net.canonicalize();
    net.validate();
    return net;
}

Reencoding amo_ladder(const std::vector<Var>& xs, Var first_aux) {
    const Prn net = amo_ladder_net(xs, first_aux);
    return {formula_of(net), std::set<Var>(net.aux.begin(), net.aux.end())};
}

Reencoding amo_product(const std::vector<Var>& xs, Var first_aux) {
    const std::size_t n = xs.size();
    if (n == 0) throw DomainError("amo_product: no variables");
    std::vector<Var> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("amo_product: repeated variable");
    require_fresh_range(sorted, first_aux);

    if (n == 1) return {Formula({}, sorted.back()), {}};
    if (n == 2)
        return {Formula({binary(Lit::neg(xs[0]), Lit::neg(xs[1]))}, sorted.back()), {}};

    std::size_t R = 1;
    while (R * R < n) ++R;
    const std::size_t C = (n + R - 1) / R;
    const std::size_t rows = (n + C - 1) / C;

    std::vector<Var> rowv, colv;
    for (std::size_t i = 0; i < rows; ++i) rowv.push_back(first_aux + static_cast<Var>(i));
    for (std::size_t j = 0; j < C; ++j)
        colv.push_back(first_aux + static_cast<Var>(rows + j));

    std::vector<Clause> cs;
    cs.reserve(2 * n + rows * rows + C * C);
    for (std::size_t k = 0; k < n; ++k) {
        cs.push_back(binary(Lit::neg(xs[k]), Lit::pos(rowv[k / C])));
        cs.push_back(binary(Lit::neg(xs[k]), Lit::pos(colv[k % C])));
    }
    Formula out(std::move(cs), colv.back());
    out.add_all(at_most_one_direct(rowv).clauses());
    out.add_all(at_most_one_direct(colv).clauses());

    std::set<Var> aux(rowv.begin(), rowv.end());
    aux.insert(colv.begin(), colv.end());
    return {std::move(out), std::move(aux)};
}

AutoReencodeResult auto_reencode(const Formula& f) {
    const auto t0 = std::chrono::steady_clock::now();
    AutoReencodeResult res;
    res.report.input_clauses = f.size();

    SimplificationResult s = simplify_to_simple(f);
    if (s.unsat) {
        auto [g, aux] = reassemble(Formula(), s, {});
        res.formula = std::move(g);
        res.aux = std::move(aux);
        res.report.method = "unsat";
    } else {
        Reencoding enc = reencode_general(s.core, s.original_vars + 1);
        res.report.method = enc.aux.empty() ? "passthrough" : "blocks";
        auto [g, aux] = reassemble(enc.formula, s, enc.aux);
        res.formula = std::move(g);
        res.aux = std::move(aux);
    }

    res.simplification = std::move(s);
    res.report.output_clauses = res.formula.size();
    res.report.aux_added = res.aux.size();
    res.report.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

} // namespace reenc
