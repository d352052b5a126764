#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "helpers.hpp"
#include "reenc/bench.hpp"
#include "reenc/errors.hpp"
#include "reenc/verify.hpp"

#include <json.hpp>

using namespace reenc;

namespace {

std::string write_script(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/reenc-test-" + name + ".sh";
    {
        std::ofstream out(path);
        REQUIRE(out.good());
        out << "#!/bin/sh\n" << body;
    }
    REQUIRE(std::system(("chmod +x " + path).c_str()) == 0);
    return path;
}

// every subset of size n-k+1 holds a true variable
Formula naive_at_least(std::size_t n, std::size_t k) {
    Formula f;
    f.declare_vars(static_cast<Var>(n));
    if (k == 0) return f;
    const std::size_t pick = n - k + 1;
    std::vector<std::size_t> idx(pick);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
        std::vector<Lit> ls;
        for (std::size_t i : idx) ls.push_back(Lit::pos(static_cast<Var>(i + 1)));
        f.add(Clause(std::move(ls)));
        std::size_t j = pick;
        while (j > 0 && idx[j - 1] == n - pick + j - 1) --j;
        if (j == 0) break;
        ++idx[j - 1];
        for (std::size_t t = j; t < pick; ++t) idx[t] = idx[t - 1] + 1;
    }
    return f;
}

} // namespace

TEST_CASE("exclusion generation is deterministic and on-density") {
    const Formula a = gen_exclusions(100, 0.5, 7);
    const Formula b = gen_exclusions(100, 0.5, 7);
    CHECK(a == b);
    CHECK(a != gen_exclusions(100, 0.5, 8));

    for (const Clause& c : a.clauses()) {
        CHECK(c.width() == 2);
        CHECK(!c.lits()[0].positive());
        CHECK(!c.lits()[1].positive());
    }
    // 4950 pairs at p = 1/2: expect about 2475
    CHECK(a.size() > 2100);
    CHECK(a.size() < 2850);
    CHECK(a.num_vars() == 100);

    CHECK(gen_exclusions(50, 0.0, 1).empty());
    CHECK(gen_exclusions(50, 1.0, 1).size() == 50 * 49 / 2);
    CHECK_THROWS_AS(gen_exclusions(10, 1.5, 1), DomainError);
}

TEST_CASE("threshold schedules match their fixtures") {
    CHECK(regime_k(600, false) == 12);
    CHECK(regime_k(1200, false) == 13);
    CHECK(regime_k(500, true) == 268);
    CHECK(regime_k(8, true) == 8); // capped at n
}

TEST_CASE("the counter means at-least-k, exhaustively") {
    for (std::size_t n = 1; n <= 8; ++n) {
        std::vector<Var> xs(n);
        std::iota(xs.begin(), xs.end(), Var{1});
        for (std::size_t k = 0; k <= n; ++k) {
            const Reencoding c = count_at_least(xs, k, static_cast<Var>(n) + 1);
            for (const Clause& cl : c.formula.clauses()) CHECK(cl.width() <= 3);
            CHECK(!check_encoding(naive_at_least(n, k), c.formula, c.aux));
        }
    }
    CHECK_THROWS_AS(count_at_least({1, 2}, 3, 3), DomainError);
    CHECK_THROWS_AS(count_at_least({1, 2}, 1, 2), DomainError);
    CHECK(count_at_least({1, 2, 3}, 0, 4).formula.empty());
    CHECK(count_at_least({1, 2, 3}, 3, 4).aux.empty()); // all-true needs no registers
}

TEST_CASE("the binary fragment split is a partition") {
    const Formula f(std::vector<Clause>{Clause({-1, -2}), Clause({-1, 3}),
                                        Clause({2, 3}), Clause({-2, -3}),
                                        Clause({1, 2, 3}), Clause({4})});
    const FragmentSplit s = split_binary_fragment(f);
    CHECK(s.fragment ==
          Formula(std::vector<Clause>{Clause({-1, -2}), Clause({-2, -3})}));
    CHECK(s.rest.size() == 4);
    Formula joined = s.fragment;
    joined.add_all(s.rest.clauses());
    CHECK(joined == f);
}

TEST_CASE("instances carry their counter and reencode the fragment") {
    const BenchInstance inst = build_instance(60, 0.5, false, 3);
    CHECK(inst.k == regime_k(60, false));
    CHECK(!inst.fragment.empty());
    // the counter never contributes all-negative binary clauses
    CHECK(split_binary_fragment(inst.before).fragment == inst.fragment);
    CHECK(inst.after.size() ==
          inst.before.size() - inst.fragment.size() + inst.fragment_enc.formula.size());
    CHECK(recovers_exactly(inst.fragment, inst.fragment_enc.formula,
                           inst.fragment_enc.aux));
    CHECK(inst.reencode_ms >= 0.0);
}

TEST_CASE("solver outcomes are parsed, timed out and validated") {
    const std::string sat =
        write_script("sat", "echo \"s SATISFIABLE\"\nexit 10\n");
    const std::string unsat =
        write_script("unsat", "echo \"s UNSATISFIABLE\"\nexit 20\n");
    const std::string code_only = write_script("code", "exit 10\n");
    const std::string garbage = write_script("garbage", "echo hello\nexit 0\n");
    const std::string slow = write_script("slow", "sleep 5\nexit 10\n");

    const Formula f(std::vector<Clause>{Clause({-1, -2})});
    CHECK(run_solver(sat, f, 10).status == "sat");
    CHECK(run_solver(unsat, f, 10).status == "unsat");
    CHECK(run_solver(code_only, f, 10).status == "sat");
    CHECK_THROWS_AS(run_solver(garbage, f, 10), SolverError);
    CHECK_THROWS_AS(run_solver("/nonexistent/solver", f, 10), SolverError);

    const SolveOutcome t = run_solver(slow, f, 1.0);
    CHECK(t.status == "timeout");
    CHECK(t.seconds >= 0.9);
    CHECK(t.seconds < 4.0);
}

TEST_CASE("bench rows audit, aggregate and serialize") {
    BenchOptions opt;
    opt.n = 50;
    opt.trials = 2;
    opt.seed = 9;
    const std::vector<BenchRow> rows = run_bench(opt);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].seed != rows[1].seed);
    for (const BenchRow& r : rows) {
        CHECK(r.n == 50);
        CHECK(r.k == regime_k(50, false));
        CHECK(r.audited);
        CHECK(r.fragment_clauses > 0);
        CHECK(r.total_after == r.total_before - r.fragment_clauses + r.reencoded_clauses);
        CHECK(r.before.status == "skipped");
    }

    const std::string csv = rows_to_csv(rows);
    CHECK(csv.find("n,") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    const nlohmann::json j = nlohmann::json::parse(rows_to_json(rows));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0].contains("fragment_clauses"));
    CHECK(j[0].contains("reencode_ms"));

    // a solver that lies about satisfiability is caught by the audit upstream,
    // and a fake solver integrates end to end
    BenchOptions with_solver = opt;
    with_solver.trials = 1;
    with_solver.solver = write_script("sat2", "echo \"s SATISFIABLE\"\nexit 10\n");
    const std::vector<BenchRow> solved = run_bench(with_solver);
    REQUIRE(solved.size() == 1);
    CHECK(solved[0].before.status == "sat");
    CHECK(solved[0].after.status == "sat");
}
