#ifndef REENC_TESTS_HELPERS_HPP
#define REENC_TESTS_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "reenc/cnf.hpp"
#include "reenc/simplify.hpp"

namespace testutil {

using namespace reenc;

// Exhaustive satisfiability over variables 1..n; n defaults to
// f.num_vars() and must stay small.
inline bool eval_clause(const Clause& c, std::uint64_t mask) {
    for (const Lit& l : c.lits()) {
        const bool v = (mask >> (l.var() - 1)) & 1;
        if (v == l.positive()) return true;
    }
    return false;
}

inline bool eval_formula(const Formula& f, std::uint64_t mask) {
    for (const Clause& c : f.clauses())
        if (!eval_clause(c, mask)) return false;
    return true;
}

inline bool brute_sat(const Formula& f) {
    const Var n = f.num_vars();
    REQUIRE(n <= 22);
    if (f.has_empty_clause()) return false;
    const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    for (std::uint64_t m = 0;; ++m) {
        if (eval_formula(f, m)) return true;
        if (m == full) return false;
    }
}

// Satisfying masks over 1..n, for semantic-equality comparisons.
inline std::vector<std::uint64_t> truth_table(const Formula& f, Var n) {
    REQUIRE(n <= 22);
    std::vector<std::uint64_t> out;
    const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    for (std::uint64_t m = 0;; ++m) {
        if (eval_formula(f, m)) out.push_back(m);
        if (m == full) break;
    }
    return out;
}

// Arbitrary width-2 clauses on random distinct variable pairs, any signs.
inline Formula random_width2(std::mt19937_64& rng, Var n, std::size_t m) {
    REQUIRE(n >= 2);
    std::vector<Clause> cs;
    for (std::size_t i = 0; i < m; ++i) {
        const Var a = static_cast<Var>(rng() % n + 1);
        Var b = static_cast<Var>(rng() % (n - 1) + 1);
        if (b >= a) ++b;
        const Lit la = (rng() & 1) ? Lit::pos(a) : Lit::neg(a);
        const Lit lb = (rng() & 1) ? Lit::pos(b) : Lit::neg(b);
        cs.push_back(binary(la, lb));
    }
    return Formula(std::move(cs), n);
}

// Width <= 2 with occasional units, the shape the simplifier accepts.
inline Formula random_mixed(std::mt19937_64& rng, Var n, std::size_t m,
                            double unit_prob = 0.1) {
    Formula f = random_width2(rng, n, m);
    std::vector<Clause> extra;
    const auto units = static_cast<std::size_t>(unit_prob * static_cast<double>(m));
    for (std::size_t i = 0; i < units; ++i) {
        const Var v = static_cast<Var>(rng() % n + 1);
        extra.push_back(Clause({(rng() & 1) ? Lit::pos(v) : Lit::neg(v)}));
    }
    f.add_all(std::move(extra));
    return f;
}

// Random simple formula: per pair one clause at most, directions follow a
// random vertex permutation, every clause keeps a negative literal.
inline Formula random_simple(std::mt19937_64& rng, Var n, double p_undirected,
                             double p_directed) {
    std::vector<Var> perm(n);
    std::iota(perm.begin(), perm.end(), Var{1});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto draw = [&rng] { return double(rng() >> 11) * 0x1.0p-53; };
    std::vector<Clause> cs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double u = draw();
            if (u < p_undirected) {
                cs.push_back(binary(Lit::neg(perm[i]), Lit::neg(perm[j])));
            } else if (u < p_undirected + p_directed) {
                cs.push_back(binary(Lit::neg(perm[i]), Lit::pos(perm[j])));
            }
        }
    }
    Formula f(std::move(cs), n);
    REQUIRE(!is_simple(f));
    return f;
}

inline std::set<Var> to_set(const std::vector<Var>& vs) {
    return {vs.begin(), vs.end()};
}

} // namespace testutil

#endif
