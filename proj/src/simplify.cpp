#include "reenc/simplify.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace reenc {

std::string SimplicityViolation::describe() const {
    switch (kind) {
    case Kind::EquivalentLiterals:
        return "literals " + std::to_string(lits[0].code()) + " and " +
               std::to_string(lits[1].code()) + " are equivalent";
    case Kind::PositiveClause: {
        std::string s = "clause without a negative literal:";
        for (const auto& l : clauses[0].lits())
            s += " " + std::to_string(l.code());
        return s;
    }
    case Kind::DuplicateVarPair:
        return "two clauses share the variable pair {" +
               std::to_string(clauses[0].lits()[0].var()) + "," +
               std::to_string(clauses[0].lits()[1].var()) + "}";
    }
    return "";
}

static void require_width2(const Formula& f, const char* who) {
    for (const auto& c : f.clauses())
        if (c.width() != 2)
            throw WidthError(std::string(who) + ": clause width != 2");
}

// packed key for an unordered var pair
static std::uint64_t pair_key(Var u, Var v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::optional<SimplicityViolation> is_simple(const Formula& f) {
    require_width2(f, "is_simple");
    auto ts = solve_2sat(f);
    for (const auto& cls : ts.classes.nontrivial_classes()) {
        SimplicityViolation v;
        v.kind = SimplicityViolation::Kind::EquivalentLiterals;
        v.lits = {cls[0], cls[1]};
        return v;
    }
    for (const auto& c : f.clauses())
        if (c.lits()[0].positive() && c.lits()[1].positive()) {
            SimplicityViolation v;
            v.kind = SimplicityViolation::Kind::PositiveClause;
            v.clauses = {c};
            return v;
        }
    std::unordered_map<std::uint64_t, const Clause*> pairs;
    pairs.reserve(f.size() * 2);
    for (const auto& c : f.clauses()) {
        auto key = pair_key(c.lits()[0].var(), c.lits()[1].var());
        auto [it, inserted] = pairs.emplace(key, &c);
        if (!inserted) {
            SimplicityViolation v;
            v.kind = SimplicityViolation::Kind::DuplicateVarPair;
            v.clauses = {*it->second, c};
            return v;
        }
    }
    return std::nullopt;
}

// packed key for a width-<=2 clause (codes offset to be nonnegative)
static std::uint64_t clause_key(Lit a, Lit b) {
    std::int64_t x = a.code(), y = b.code();
    if (x > y) std::swap(x, y);
    return static_cast<std::uint64_t>(x + (1ll << 31)) << 32 |
           static_cast<std::uint64_t>(y + (1ll << 31));
}

SimplificationResult simplify_to_simple(const Formula& f) {
    if (f.max_width() > 2)
        throw WidthError("simplify_to_simple: clause width > 2");
    SimplificationResult s;
    s.original_vars = f.num_vars();

    auto ts = solve_2sat(f);
    if (!ts.sat) {
        s.unsat = true;
        s.core = Formula({Clause()});
        return s;
    }

    // 1. substitute every literal by its SCC representative
    std::vector<Clause> substituted;
    substituted.reserve(f.size());
    for (const auto& c : f.clauses()) {
        if (c.width() == 1) {
            substituted.push_back(
                Clause(std::vector<Lit>{ts.classes.rep(c.lits()[0])}));
            continue;
        }
        Lit a = ts.classes.rep(c.lits()[0]);
        Lit b = ts.classes.rep(c.lits()[1]);
        if (a == ~b) continue; // tautology: clause already implied
        if (a == b)
            substituted.push_back(Clause(std::vector<Lit>{a}));
        else
            substituted.push_back(binary(a, b));
    }
    Formula star(std::move(substituted));
    for (Var v = 1; v <= f.num_vars(); ++v) {
        Lit p = Lit::pos(v);
        if (ts.classes.rep(p) != p) s.equiv.emplace_back(p, ts.classes.rep(p));
    }

    // 2. weak failed-literal rule: (ℓ∨x) and (ℓ∨¬x) together entail ℓ
    std::unordered_set<std::uint64_t> present;
    present.reserve(star.size() * 2);
    for (const auto& c : star.clauses())
        if (c.width() == 2) present.insert(clause_key(c.lits()[0], c.lits()[1]));
    std::vector<Lit> entailed;
    for (const auto& c : star.clauses()) {
        if (c.width() != 2) continue;
        Lit a = c.lits()[0], b = c.lits()[1];
        if (present.count(clause_key(a, ~b))) entailed.push_back(a);
        if (present.count(clause_key(~a, b))) entailed.push_back(b);
    }

    // 3. propagate the entailed literals (and any units substitution made)
    auto up = unit_propagate(star, entailed);
    if (up.conflict)
        throw Error("simplify_to_simple: conflict on a satisfiable formula");
    s.forced = up.trail;
    Formula residue = std::move(up.residual);

    // 4. Horn renaming from a 2-SAT model; a formula that is already Horn
    //    keeps its variables (this makes the pipeline idempotent)
    bool horn = true;
    for (const auto& c : residue.clauses())
        if (c.lits()[0].positive() && c.lits()[1].positive()) {
            horn = false;
            break;
        }
    if (!horn) {
        auto model = solve_2sat(residue);
        if (!model.sat)
            throw Error("simplify_to_simple: residue unsatisfiable");
        auto used = residue.vars();
        for (Var v : used)
            if (model.model.at(v)) s.renamed.insert(v);
        std::vector<Clause> flipped;
        flipped.reserve(residue.size());
        for (const auto& c : residue.clauses()) {
            std::vector<Lit> ls;
            for (const auto& l : c.lits())
                ls.push_back(s.renamed.count(l.var()) ? ~l : l);
            flipped.push_back(Clause(std::move(ls)));
        }
        residue = Formula(std::move(flipped));
    }

    s.core = std::move(residue);
    return s;
}

std::pair<Formula, std::set<Var>> reassemble(const Formula& core_encoding,
                                             const SimplificationResult& s,
                                             const std::set<Var>& core_aux) {
    if (s.unsat) return {Formula({Clause()}), {}};
    for (Var a : core_aux)
        if (a <= s.original_vars)
            throw DomainError("reassemble: aux id collides with an original "
                              "variable");

    std::vector<Clause> out;
    out.reserve(core_encoding.size() + 4 * s.original_vars +
                2 * s.forced.size());
    for (const auto& c : core_encoding.clauses()) {
        std::vector<Lit> ls;
        for (const auto& l : c.lits())
            ls.push_back(s.renamed.count(l.var()) ? ~l : l);
        out.push_back(Clause(std::move(ls)));
    }
    for (const auto& [l, rep] : s.equiv) {
        out.push_back(binary(~l, rep));
        out.push_back(binary(~rep, l));
    }
    if (!s.forced.empty()) {
        if (s.original_vars < 2)
            throw DomainError("reassemble: no anchor variable available");
        for (const auto& l : s.forced) {
            Var anchor = (l.var() == 1) ? 2 : 1;
            out.push_back(binary(l, Lit::pos(anchor)));
            out.push_back(binary(l, Lit::neg(anchor)));
        }
    }
    Formula g(std::move(out), s.original_vars);
    return {std::move(g), core_aux};
}

std::string write_simplification_map(const SimplificationResult& s) {
    nlohmann::json j;
    j["unsat"] = s.unsat;
    j["vars"] = s.original_vars;
    auto& eq = j["equiv"] = nlohmann::json::array();
    for (const auto& [l, rep] : s.equiv)
        eq.push_back({l.code(), rep.code()});
    auto& fo = j["forced"] = nlohmann::json::array();
    for (const auto& l : s.forced) fo.push_back(l.code());
    auto& rn = j["renamed"] = nlohmann::json::array();
    for (Var v : s.renamed) rn.push_back(v);
    return j.dump(2) + "\n";
}

SimplificationResult read_simplification_map(const std::string& json_text) {
    SimplificationResult s;
    try {
        nlohmann::json j = nlohmann::json::parse(json_text);
        s.unsat = j.at("unsat").get<bool>();
        s.original_vars = j.at("vars").get<Var>();
        for (const auto& e : j.at("equiv"))
            s.equiv.emplace_back(Lit(e.at(0).get<std::int32_t>()),
                                 Lit(e.at(1).get<std::int32_t>()));
        for (const auto& e : j.at("forced"))
            s.forced.push_back(Lit(e.get<std::int32_t>()));
        for (const auto& e : j.at("renamed"))
            s.renamed.insert(e.get<Var>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("simplification map: ") + e.what());
    }
    if (s.unsat) s.core = Formula({Clause()});
    return s;
}

} // namespace reenc
