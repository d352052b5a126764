#include "reenc/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace reenc {

// --- Clause -----------------------------------------------------------------

static void sort_check(std::vector<Lit>& lits, bool* tauto) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    *tauto = false;
    for (std::size_t i = 0; i + 1 < lits.size(); ++i) {
        if (lits[i].var() == lits[i + 1].var()) {
            *tauto = true; // sorted order puts -v right before +v
            return;
        }
    }
}

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
    bool tauto = false;
    sort_check(lits_, &tauto);
    if (tauto) throw TautologyError("tautological clause");
}

Clause::Clause(std::initializer_list<std::int32_t> codes) {
    lits_.reserve(codes.size());
    for (auto c : codes) lits_.push_back(Lit(c));
    bool tauto = false;
    sort_check(lits_, &tauto);
    if (tauto) throw TautologyError("tautological clause");
}

std::optional<Clause> Clause::try_make(std::vector<Lit> lits) {
    bool tauto = false;
    sort_check(lits, &tauto);
    if (tauto) return std::nullopt;
    Clause c;
    c.lits_ = std::move(lits);
    return c;
}

bool Clause::contains(Lit l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

// --- Formula ----------------------------------------------------------------

Formula::Formula(std::vector<Clause> clauses, Var declared_vars)
    : clauses_(std::move(clauses)), num_vars_(declared_vars) {
    canonicalize();
}

void Formula::canonicalize() {
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()),
                   clauses_.end());
    for (const auto& c : clauses_)
        for (const auto& l : c.lits())
            num_vars_ = std::max(num_vars_, l.var());
}

void Formula::declare_vars(Var n) { num_vars_ = std::max(num_vars_, n); }

bool Formula::contains(const Clause& c) const {
    return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

bool Formula::has_empty_clause() const {
    // empty clause sorts first
    return !clauses_.empty() && clauses_.front().empty();
}

std::size_t Formula::max_width() const {
    std::size_t w = 0;
    for (const auto& c : clauses_) w = std::max(w, c.width());
    return w;
}

std::set<Var> Formula::vars() const {
    std::set<Var> out;
    for (const auto& c : clauses_)
        for (const auto& l : c.lits()) out.insert(l.var());
    return out;
}

void Formula::add(const Clause& c) {
    auto it = std::lower_bound(clauses_.begin(), clauses_.end(), c);
    if (it != clauses_.end() && *it == c) return;
    clauses_.insert(it, c);
    for (const auto& l : c.lits()) num_vars_ = std::max(num_vars_, l.var());
}

void Formula::add_all(std::vector<Clause> clauses) {
    clauses_.insert(clauses_.end(),
                    std::make_move_iterator(clauses.begin()),
                    std::make_move_iterator(clauses.end()));
    canonicalize();
}

// --- DIMACS -----------------------------------------------------------------

DimacsFile parse_dimacs(std::istream& in) {
    DimacsFile out;
    bool have_header = false;
    long long declared_vars = 0, declared_clauses = 0;
    std::vector<Clause> clauses;
    std::vector<Lit> cur;
    bool open_clause = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank line
        if (tok == "c") {
            std::string kind;
            if (ls >> kind && kind == "aux") {
                long long v;
                while (ls >> v) {
                    if (v <= 0)
                        throw ParseError("line " + std::to_string(lineno) +
                                         ": aux id must be positive");
                    out.aux.insert(static_cast<Var>(v));
                }
                if (!ls.eof())
                    throw ParseError("line " + std::to_string(lineno) +
                                     ": bad aux declaration");
            }
            continue;
        }
        if (tok.size() == 1 && tok[0] == 'c') continue;
        if (tok == "p") {
            std::string fmt;
            if (have_header || !(ls >> fmt >> declared_vars >> declared_clauses) ||
                fmt != "cnf" || declared_vars < 0 || declared_clauses < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": malformed header");
            have_header = true;
            continue;
        }
        // clause tokens; clauses may span lines, 0 terminates
        ls.clear();
        ls.str(line);
        long long v;
        while (ls >> v) {
            if (!have_header)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": clause before header");
            if (v == 0) {
                auto c = Clause::try_make(cur);
                if (!c)
                    throw TautologyError("line " + std::to_string(lineno) +
                                         ": tautological clause");
                clauses.push_back(std::move(*c));
                cur.clear();
                open_clause = false;
            } else {
                if (std::llabs(v) > declared_vars)
                    throw ParseError("line " + std::to_string(lineno) +
                                     ": literal out of range");
                cur.push_back(Lit(static_cast<std::int32_t>(v)));
                open_clause = true;
            }
        }
        if (!ls.eof()) // non-numeric garbage
            throw ParseError("line " + std::to_string(lineno) +
                             ": bad token in clause");
    }
    if (!have_header) throw ParseError("missing header");
    if (open_clause) throw ParseError("unterminated clause at end of input");
    if (static_cast<long long>(clauses.size()) != declared_clauses)
        throw ParseError("clause count mismatch: header says " +
                         std::to_string(declared_clauses) + ", found " +
                         std::to_string(clauses.size()));
    for (Var a : out.aux)
        if (a > static_cast<Var>(declared_vars))
            throw ParseError("aux id beyond declared variable count");
    out.formula = Formula(std::move(clauses), static_cast<Var>(declared_vars));
    return out;
}

DimacsFile parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string emit_dimacs(const Formula& f, const std::set<Var>& aux) {
    Var n = f.num_vars();
    for (Var a : aux) n = std::max(n, a);
    std::string out;
    out.reserve(f.size() * 12 + 64);
    char buf[32];
    auto append_int = [&](long long v) {
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        (void)ec;
        out.append(buf, p);
    };
    out += "p cnf ";
    append_int(n);
    out += ' ';
    append_int(static_cast<long long>(f.size()));
    out += '\n';
    if (!aux.empty()) {
        out += "c aux";
        for (Var a : aux) {
            out += ' ';
            append_int(a);
        }
        out += '\n';
    }
    for (const auto& c : f.clauses()) {
        for (const auto& l : c.lits()) {
            append_int(l.code());
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

// --- Semantics --------------------------------------------------------------

Formula restrict_formula(const Formula& f, const Assignment& a) {
    std::vector<Clause> kept;
    kept.reserve(f.size());
    std::vector<Lit> residue;
    for (const auto& c : f.clauses()) {
        bool satisfied = false;
        residue.clear();
        for (const auto& l : c.lits()) {
            auto it = a.find(l.var());
            if (it == a.end()) {
                residue.push_back(l);
            } else if (it->second == l.positive()) {
                satisfied = true;
                break;
            }
        }
        if (satisfied) continue;
        auto r = Clause::try_make(residue);
        kept.push_back(std::move(*r)); // residue of a clause is never tautological
    }
    return Formula(std::move(kept));
}

UnitPropResult unit_propagate(const Formula& f, const std::vector<Lit>& assume) {
    UnitPropResult res;
    // value per var: 0 unset, 1 true, -1 false
    std::vector<std::int8_t> val(f.num_vars() + 1, 0);
    std::vector<Lit> queue;

    auto enqueue = [&](Lit l) -> bool { // false on conflict
        std::int8_t want = l.positive() ? 1 : -1;
        std::int8_t& slot = val[l.var()];
        if (slot == 0) {
            slot = want;
            res.trail.push_back(l);
            queue.push_back(l);
            return true;
        }
        return slot == want;
    };

    for (const auto& l : assume) {
        if (l.var() > f.num_vars()) {
            val.resize(l.var() + 1, 0);
        }
        if (!enqueue(l)) {
            res.conflict = true;
            return res;
        }
    }
    if (f.has_empty_clause()) {
        res.conflict = true;
        return res;
    }

    // occurrence lists over the original clause vector
    const auto& cls = f.clauses();
    std::vector<std::vector<std::uint32_t>> occ(val.size());
    for (std::uint32_t i = 0; i < cls.size(); ++i)
        for (const auto& l : cls[i].lits()) occ[l.var()].push_back(i);

    for (const auto& c : cls)
        if (c.width() == 1 && !enqueue(c.lits()[0])) {
            res.conflict = true;
            return res;
        }

    std::size_t head = 0;
    while (head < queue.size()) {
        Lit assigned = queue[head++];
        for (std::uint32_t ci : occ[assigned.var()]) {
            const Clause& c = cls[ci];
            bool satisfied = false;
            Lit unassigned;
            int free_count = 0;
            for (const auto& l : c.lits()) {
                std::int8_t v = l.var() < val.size() ? val[l.var()] : 0;
                if (v == 0) {
                    unassigned = l;
                    ++free_count;
                } else if ((v == 1) == l.positive()) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied) continue;
            if (free_count == 0) {
                res.conflict = true;
                return res;
            }
            if (free_count == 1 && !enqueue(unassigned)) {
                res.conflict = true;
                return res;
            }
        }
    }

    Assignment a;
    for (const auto& l : res.trail) a[l.var()] = l.positive();
    res.residual = restrict_formula(f, a);
    return res;
}

// --- DP elimination ---------------------------------------------------------

Formula eliminate_variable(const Formula& f, Var v) {
    std::vector<Clause> kept;
    std::vector<const Clause*> pos, neg;
    for (const auto& c : f.clauses()) {
        if (c.contains(Lit::pos(v)))
            pos.push_back(&c);
        else if (c.contains(Lit::neg(v)))
            neg.push_back(&c);
        else
            kept.push_back(c);
    }
    std::vector<Lit> merged;
    for (const Clause* p : pos)
        for (const Clause* q : neg) {
            merged.clear();
            for (const auto& l : p->lits())
                if (l.var() != v) merged.push_back(l);
            for (const auto& l : q->lits())
                if (l.var() != v) merged.push_back(l);
            auto r = Clause::try_make(merged);
            if (r) kept.push_back(std::move(*r));
        }
    return Formula(std::move(kept));
}

// --- helpers ----------------------------------------------------------------

Clause binary(Lit a, Lit b) { return Clause(std::vector<Lit>{a, b}); }

Formula at_most_one_direct(const std::vector<Var>& vars) {
    std::vector<Clause> cs;
    cs.reserve(vars.size() * (vars.size() - 1) / 2);
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            cs.push_back(binary(Lit::neg(vars[i]), Lit::neg(vars[j])));
    return Formula(std::move(cs));
}

} // namespace reenc
