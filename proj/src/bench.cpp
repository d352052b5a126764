#include "reenc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "reenc/errors.hpp"
#include "reenc/verify.hpp"

namespace reenc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_draw(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * (1.0 / 9007199254740992.0);
}

} // namespace

Formula gen_exclusions(std::size_t n, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0)
        throw DomainError("gen_exclusions: density outside [0,1]");
    std::mt19937_64 eng(splitmix64(seed));
    std::vector<Clause> cs;
    for (Var i = 1; i <= n; ++i)
        for (Var j = i + 1; j <= n; ++j)
            if (unit_draw(eng) < density)
                cs.push_back(binary(Lit::neg(i), Lit::neg(j)));
    return Formula(std::move(cs), static_cast<Var>(n));
}

std::size_t regime_k(std::size_t n, bool unsat) {
    if (n == 0) return 0;
    const double lg = std::log2(static_cast<double>(n));
    const double k = unsat ? 30.0 * lg : 1.0 + std::floor(1.2 * lg);
    return std::min(n, static_cast<std::size_t>(std::max(0.0, k)));
}

Reencoding count_at_least(const std::vector<Var>& xs, std::size_t k, Var first_aux) {
    const std::size_t n = xs.size();
    if (k > n) throw DomainError("count_at_least: k exceeds the variable count");
    if (k == 0) return {Formula(), {}};
    if (!xs.empty()) {
        const Var maxv = *std::max_element(xs.begin(), xs.end());
        if (first_aux == 0 || first_aux <= maxv)
            throw DomainError("count_at_least: register range overlaps the variables");
    }

    // At most K = n - k of the xi may be false; the register s(i,j) means
    // "at least j of the first i are false".
    const std::size_t K = n - k;
    std::vector<Clause> cs;
    if (K == 0) {
        for (Var x : xs) cs.push_back(Clause({Lit::pos(x)}));
        return {Formula(std::move(cs)), {}};
    }

    auto S = [&](std::size_t i, std::size_t j) {
        return Lit::pos(first_aux + static_cast<Var>((i - 1) * K + (j - 1)));
    };
    auto x = [&](std::size_t i) { return Lit::pos(xs[i - 1]); };

    cs.push_back(binary(x(1), S(1, 1)));
    for (std::size_t j = 2; j <= K; ++j) cs.push_back(Clause({~S(1, j)}));
    for (std::size_t i = 2; i + 1 <= n; ++i) {
        for (std::size_t j = 1; j <= K; ++j)
            cs.push_back(binary(~S(i - 1, j), S(i, j)));
        cs.push_back(binary(x(i), S(i, 1)));
        for (std::size_t j = 2; j <= K; ++j)
            cs.push_back(Clause(std::vector<Lit>{x(i), ~S(i - 1, j - 1), S(i, j)}));
    }
    for (std::size_t i = 2; i <= n; ++i)
        cs.push_back(binary(x(i), ~S(i - 1, K)));

    std::set<Var> aux;
    for (std::size_t i = 1; i + 1 <= n; ++i)
        for (std::size_t j = 1; j <= K; ++j) aux.insert(S(i, j).var());
    Var declared = aux.empty() ? 0 : *aux.rbegin();
    return {Formula(std::move(cs), declared), std::move(aux)};
}

FragmentSplit split_binary_fragment(const Formula& f) {
    std::vector<Clause> frag, rest;
    for (const Clause& c : f.clauses()) {
        const bool allneg = c.width() == 2 && !c.lits()[0].positive() &&
                            !c.lits()[1].positive();
        (allneg ? frag : rest).push_back(c);
    }
    return {Formula(std::move(frag)), Formula(std::move(rest), f.num_vars())};
}

SolveOutcome run_solver(const std::string& solver_path, const Formula& f,
                        double timeout_s) {
    char path[] = "/tmp/reenc-bench-XXXXXX";
    const int fd = mkstemp(path);
    if (fd < 0) throw SolverError("run_solver: cannot create a temp file");
    {
        const std::string text = emit_dimacs(f);
        std::size_t off = 0;
        while (off < text.size()) {
            const ssize_t w = write(fd, text.data() + off, text.size() - off);
            if (w <= 0) {
                close(fd);
                unlink(path);
                throw SolverError("run_solver: cannot write the instance");
            }
            off += static_cast<std::size_t>(w);
        }
        close(fd);
    }

    int pipefd[2];
    if (pipe(pipefd) != 0) {
        unlink(path);
        throw SolverError("run_solver: pipe failed");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const pid_t pid = fork();
    if (pid < 0) {
        unlink(path);
        throw SolverError("run_solver: fork failed");
    }
    if (pid == 0) {
        dup2(pipefd[1], STDOUT_FILENO);
        close(pipefd[0]);
        close(pipefd[1]);
        execlp(solver_path.c_str(), solver_path.c_str(), path,
               static_cast<char*>(nullptr));
        _exit(127);
    }
    close(pipefd[1]);

    std::string outbuf;
    bool timed_out = false;
    char chunk[4096];
    for (;;) {
        const double left =
            timeout_s - std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        if (left <= 0) {
            timed_out = true;
            break;
        }
        pollfd pf{pipefd[0], POLLIN, 0};
        const int pr = poll(&pf, 1, static_cast<int>(std::min(left * 1000.0, 1000.0)) + 1);
        if (pr < 0) break;
        if (pr == 0) continue;
        const ssize_t got = read(pipefd[0], chunk, sizeof chunk);
        if (got <= 0) break;
        outbuf.append(chunk, static_cast<std::size_t>(got));
    }
    close(pipefd[0]);
    if (timed_out) kill(pid, SIGKILL);
    int status = 0;
    waitpid(pid, &status, 0);
    unlink(path);

    SolveOutcome r;
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (timed_out) {
        r.status = "timeout";
        return r;
    }
    if (outbuf.find("s SATISFIABLE") != std::string::npos) {
        r.status = "sat";
    } else if (outbuf.find("s UNSATISFIABLE") != std::string::npos) {
        r.status = "unsat";
    } else if (WIFEXITED(status) && WEXITSTATUS(status) == 10) {
        r.status = "sat";
    } else if (WIFEXITED(status) && WEXITSTATUS(status) == 20) {
        r.status = "unsat";
    } else {
        throw SolverError("run_solver: no verdict from the solver");
    }
    return r;
}

BenchInstance build_instance(std::size_t n, double density, bool unsat_regime,
                             std::uint64_t seed) {
    BenchInstance inst;
    inst.fragment = gen_exclusions(n, density, seed);
    inst.k = regime_k(n, unsat_regime);

    std::vector<Var> xs;
    xs.reserve(n);
    for (Var v = 1; v <= n; ++v) xs.push_back(v);
    const Reencoding counter = count_at_least(xs, inst.k, static_cast<Var>(n) + 1);

    inst.before = inst.fragment;
    inst.before.declare_vars(static_cast<Var>(n));
    inst.before.add_all(counter.formula.clauses());

    const Var first_aux = inst.before.num_vars() + 1;
    const auto t0 = std::chrono::steady_clock::now();
    const Diagram d = diagram_of(inst.fragment);
    const Prn net = nechiporuk_undirected(d, first_aux);
    inst.fragment_enc = {formula_of(net),
                         std::set<Var>(net.aux.begin(), net.aux.end())};
    inst.reencode_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();

    inst.after = inst.fragment_enc.formula;
    inst.after.declare_vars(inst.before.num_vars());
    inst.after.add_all(counter.formula.clauses());
    return inst;
}

std::vector<BenchRow> run_bench(const BenchOptions& opt) {
    std::vector<BenchRow> rows;
    rows.reserve(opt.trials);
    for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::uint64_t tseed =
            splitmix64(opt.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t));
        const BenchInstance inst =
            build_instance(opt.n, opt.density, opt.unsat_regime, tseed);

        BenchRow row;
        row.n = opt.n;
        row.k = inst.k;
        row.seed = tseed;
        row.fragment_clauses = inst.fragment.size();
        row.reencoded_clauses = inst.fragment_enc.formula.size();
        row.total_before = inst.before.size();
        row.total_after = inst.after.size();
        row.aux_added = inst.fragment_enc.aux.size();
        row.reencode_ms = inst.reencode_ms;

        if (opt.audit) {
            if (!recovers_exactly(inst.fragment, inst.fragment_enc.formula,
                                  inst.fragment_enc.aux))
                throw Error("run_bench: fragment reencoding failed its audit");
            row.audited = true;
        }
        if (!opt.solver.empty()) {
            row.before = run_solver(opt.solver, inst.before, opt.solver_timeout_s);
            row.after = run_solver(opt.solver, inst.after, opt.solver_timeout_s);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "n,k,seed,fragment_clauses,reencoded_clauses,total_before,total_after,"
          "aux_added,reencode_ms,audited,status_before,seconds_before,"
          "status_after,seconds_after\n";
    for (const BenchRow& r : rows) {
        os << r.n << ',' << r.k << ',' << r.seed << ',' << r.fragment_clauses << ','
           << r.reencoded_clauses << ',' << r.total_before << ',' << r.total_after
           << ',' << r.aux_added << ',' << r.reencode_ms << ','
           << (r.audited ? 1 : 0) << ',' << r.before.status << ','
           << r.before.seconds << ',' << r.after.status << ',' << r.after.seconds
           << '\n';
    }
    return os.str();
}

std::string rows_to_json(const std::vector<BenchRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const BenchRow& r : rows) {
        out.push_back({{"n", r.n},
                       {"k", r.k},
                       {"seed", r.seed},
                       {"fragment_clauses", r.fragment_clauses},
                       {"reencoded_clauses", r.reencoded_clauses},
                       {"total_before", r.total_before},
                       {"total_after", r.total_after},
                       {"aux_added", r.aux_added},
                       {"reencode_ms", r.reencode_ms},
                       {"audited", r.audited},
                       {"before", {{"status", r.before.status}, {"seconds", r.before.seconds}}},
                       {"after", {{"status", r.after.status}, {"seconds", r.after.seconds}}}});
    }
    return out.dump(2);
}

} // namespace reenc
