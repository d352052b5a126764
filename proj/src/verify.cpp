#include "reenc/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>
#include <vector>

#include "reenc/errors.hpp"

namespace reenc {

namespace {

// Reverse topological order of the implication edges among the variables
// being eliminated, min-id first; variables on cycles come last, ascending.
std::vector<Var> elimination_order(const Formula& f, const std::set<Var>& aux) {
    std::vector<Var> vs(aux.begin(), aux.end());
    const std::size_t k = vs.size();
    auto idx_of = [&](Var v) -> std::size_t {
        return static_cast<std::size_t>(
            std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };

    std::vector<std::vector<std::size_t>> succ(k);
    std::vector<std::size_t> indeg(k, 0);
    for (const Clause& c : f.clauses()) {
        if (c.width() != 2) continue;
        Lit a = c.lits()[0], b = c.lits()[1];
        if (a.positive() == b.positive()) continue;
        Lit tail = a.positive() ? b : a; // the negative literal
        Lit head = a.positive() ? a : b;
        if (!aux.count(tail.var()) || !aux.count(head.var())) continue;
        succ[idx_of(tail.var())].push_back(idx_of(head.var()));
        ++indeg[idx_of(head.var())];
    }

    std::vector<std::size_t> topo;
    topo.reserve(k);
    std::priority_queue<std::size_t, std::vector<std::size_t>,
                        std::greater<std::size_t>>
        ready;
    for (std::size_t i = 0; i < k; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<char> placed(k, 0);
    while (!ready.empty()) {
        std::size_t u = ready.top();
        ready.pop();
        topo.push_back(u);
        placed[u] = 1;
        for (std::size_t w : succ[u])
            if (--indeg[w] == 0) ready.push(w);
    }

    std::vector<Var> order;
    order.reserve(k);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        order.push_back(vs[*it]);
    for (std::size_t i = 0; i < k; ++i)
        if (!placed[i]) order.push_back(vs[i]);
    return order;
}

} // namespace

Formula eliminate_auxiliaries(const Formula& f, const std::set<Var>& aux,
                              BlowupGuard guard) {
    if (aux.empty()) return f;
    if (aux.count(0)) throw DomainError("eliminate_auxiliaries: variable 0");

    std::vector<Clause> store(f.clauses().begin(), f.clauses().end());
    std::vector<char> alive(store.size(), 1);
    std::size_t live = store.size();

    // Occurrence lists for the variables being eliminated only; entries go
    // stale when a clause dies and are skipped on use.
    Var maxv = f.num_vars();
    for (Var v : aux) maxv = std::max(maxv, v);
    std::vector<std::vector<std::size_t>> occ(maxv + 1);
    auto note = [&](std::size_t ci) {
        for (Lit l : store[ci].lits())
            if (l.var() <= maxv && aux.count(l.var())) occ[l.var()].push_back(ci);
    };
    for (std::size_t i = 0; i < store.size(); ++i) note(i);

    for (Var v : elimination_order(f, aux)) {
        std::vector<std::size_t> pos, neg;
        for (std::size_t ci : occ[v]) {
            if (!alive[ci]) continue;
            if (store[ci].contains(Lit::pos(v)))
                pos.push_back(ci);
            else
                neg.push_back(ci);
        }
        occ[v].clear();

        std::vector<Clause> resolvents;
        resolvents.reserve(pos.size() * neg.size());
        std::vector<Lit> scratch;
        for (std::size_t pi : pos) {
            for (std::size_t ni : neg) {
                scratch.clear();
                for (Lit l : store[pi].lits())
                    if (l.var() != v) scratch.push_back(l);
                for (Lit l : store[ni].lits())
                    if (l.var() != v) scratch.push_back(l);
                if (auto r = Clause::try_make(scratch)) resolvents.push_back(*r);
            }
        }
        std::sort(resolvents.begin(), resolvents.end());
        resolvents.erase(std::unique(resolvents.begin(), resolvents.end()),
                         resolvents.end());

        for (std::size_t ci : pos) alive[ci] = 0;
        for (std::size_t ci : neg) alive[ci] = 0;
        live -= pos.size() + neg.size();
        for (Clause& r : resolvents) {
            store.push_back(std::move(r));
            alive.push_back(1);
            note(store.size() - 1);
            ++live;
            if (live > guard.max_clauses)
                throw BlowupGuardError("eliminate_auxiliaries: clause blowup");
        }
    }

    std::vector<Clause> out;
    out.reserve(live);
    for (std::size_t i = 0; i < store.size(); ++i)
        if (alive[i]) out.push_back(std::move(store[i]));
    return Formula(std::move(out));
}

bool recovers_exactly(const Formula& orig, const Formula& enc,
                      const std::set<Var>& aux, BlowupGuard guard) {
    return eliminate_auxiliaries(enc, aux, guard) == orig;
}

std::string EncodingMismatch::describe() const {
    std::ostringstream os;
    os << "assignment";
    for (const auto& [v, b] : assignment) os << ' ' << (b ? "" : "-") << 'x' << v;
    os << ": original " << (orig_sat ? "satisfiable" : "unsatisfiable")
       << ", encoding " << (enc_sat ? "satisfiable" : "unsatisfiable");
    return os.str();
}

namespace {

struct MaskClause {
    std::uint32_t pos = 0, neg = 0;       // source-variable literals
    std::vector<std::int32_t> aux;        // auxiliary literals, compact codes
};

// Satisfiability of the residual clauses over the auxiliaries, by branching
// with unit propagation. Literal code 2*i for auxiliary i, 2*i+1 negated.
bool residual_sat(const std::vector<const std::vector<std::int32_t>*>& cs,
                  std::vector<std::int8_t>& val) {
    std::size_t branch_lit = SIZE_MAX;
    for (const auto* c : cs) {
        std::size_t unassigned = SIZE_MAX;
        std::size_t free_count = 0;
        bool sat = false;
        for (std::int32_t code : *c) {
            std::size_t i = static_cast<std::size_t>(code) >> 1;
            bool want = (code & 1) == 0;
            if (val[i] == 0) {
                unassigned = static_cast<std::size_t>(code);
                ++free_count;
            } else if ((val[i] > 0) == want) {
                sat = true;
                break;
            }
        }
        if (sat) continue;
        if (free_count == 0) return false;
        if (free_count == 1) {
            // Unit: force and restart the scan.
            std::size_t i = unassigned >> 1;
            val[i] = (unassigned & 1) == 0 ? 1 : -1;
            bool ok = residual_sat(cs, val);
            val[i] = 0;
            return ok;
        }
        if (branch_lit == SIZE_MAX) branch_lit = unassigned;
    }
    if (branch_lit == SIZE_MAX) return true;
    std::size_t i = branch_lit >> 1;
    for (std::int8_t b : {std::int8_t(1), std::int8_t(-1)}) {
        val[i] = b;
        if (residual_sat(cs, val)) {
            val[i] = 0;
            return true;
        }
    }
    val[i] = 0;
    return false;
}

} // namespace

std::optional<EncodingMismatch> check_encoding(const Formula& orig,
                                               const Formula& enc,
                                               const std::set<Var>& enc_aux) {
    const Var nb = orig.num_vars();
    if (nb > 20) throw DomainError("check_encoding: more than 20 source variables");
    for (Var a : enc_aux)
        if (a <= nb)
            throw DomainError("check_encoding: auxiliary inside the source range");

    std::vector<Var> auxv(enc_aux.begin(), enc_aux.end());
    auto aux_idx = [&](Var v) -> std::size_t {
        return static_cast<std::size_t>(
            std::lower_bound(auxv.begin(), auxv.end(), v) - auxv.begin());
    };

    std::vector<std::pair<std::uint32_t, std::uint32_t>> orig_masks;
    orig_masks.reserve(orig.size());
    for (const Clause& c : orig.clauses()) {
        std::uint32_t p = 0, n = 0;
        for (Lit l : c.lits())
            (l.positive() ? p : n) |= 1u << (l.var() - 1);
        orig_masks.emplace_back(p, n);
    }

    std::vector<MaskClause> mixed;      // clauses touching an auxiliary
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pure; // source-only
    for (const Clause& c : enc.clauses()) {
        MaskClause mc;
        for (Lit l : c.lits()) {
            if (l.var() <= nb) {
                (l.positive() ? mc.pos : mc.neg) |= 1u << (l.var() - 1);
            } else if (enc_aux.count(l.var())) {
                mc.aux.push_back(static_cast<std::int32_t>(
                    (aux_idx(l.var()) << 1) | (l.positive() ? 0 : 1)));
            } else {
                throw DomainError("check_encoding: encoding uses an unknown variable");
            }
        }
        if (mc.aux.empty())
            pure.emplace_back(mc.pos, mc.neg);
        else
            mixed.push_back(std::move(mc));
    }

    const std::uint32_t full = nb == 32 ? ~0u : ((1u << nb) - 1);
    std::vector<std::int8_t> val(auxv.size(), 0);
    std::vector<const std::vector<std::int32_t>*> residual;
    residual.reserve(mixed.size());

    for (std::uint64_t m = 0; m <= full; ++m) {
        const auto tau = static_cast<std::uint32_t>(m);
        bool orig_sat = true;
        for (const auto& [p, n] : orig_masks) {
            if ((p & tau) == 0 && (n & ~tau & full) == 0) {
                orig_sat = false;
                break;
            }
        }

        bool enc_sat = true;
        for (const auto& [p, n] : pure) {
            if ((p & tau) == 0 && (n & ~tau & full) == 0) {
                enc_sat = false;
                break;
            }
        }
        if (enc_sat) {
            residual.clear();
            for (const MaskClause& mc : mixed) {
                if ((mc.pos & tau) != 0 || (mc.neg & ~tau & full) != 0) continue;
                residual.push_back(&mc.aux);
            }
            if (!residual.empty()) enc_sat = residual_sat(residual, val);
        }

        if (orig_sat != enc_sat) {
            EncodingMismatch mm;
            for (Var v = 1; v <= nb; ++v)
                mm.assignment[v] = ((tau >> (v - 1)) & 1) != 0;
            mm.orig_sat = orig_sat;
            mm.enc_sat = enc_sat;
            return mm;
        }
    }
    return std::nullopt;
}

} // namespace reenc
