#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "reenc/bench.hpp"
#include "reenc/construct.hpp"
#include "reenc/errors.hpp"
#include "reenc/heuristic.hpp"
#include "reenc/simplify.hpp"
#include "reenc/verify.hpp"

namespace {

reenc::DimacsFile read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw reenc::Error("cannot open " + path);
    return reenc::parse_dimacs(in);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw reenc::Error("cannot write " + path);
    out << text;
}

std::vector<reenc::Var> range_vars(std::size_t n) {
    std::vector<reenc::Var> xs;
    xs.reserve(n);
    for (reenc::Var v = 1; v <= n; ++v) xs.push_back(v);
    return xs;
}

// Network of the simple formula f, auxiliaries above every variable of f.
reenc::Prn simple_net(const reenc::Formula& f) {
    const reenc::Diagram d = reenc::diagram_of(f);
    return reenc::prn_of(reenc::polarize(d, reenc::topo_order(d)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-CNF reencoding toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // simplify
    std::string si_in, si_out, si_map;
    auto* si = app.add_subcommand("simplify", "Reduce a width-2 formula to its simple core");
    si->add_option("input", si_in, "input DIMACS")->required();
    si->add_option("-o,--out", si_out, "core DIMACS")->required();
    si->add_option("--map", si_map, "JSON file recording how to reassemble");
    si->callback([&] {
        const reenc::DimacsFile df = read_dimacs_file(si_in);
        const reenc::SimplificationResult s = reenc::simplify_to_simple(df.formula);
        write_text(si_out, reenc::emit_dimacs(s.core));
        if (!si_map.empty()) write_text(si_map, reenc::write_simplification_map(s));
        std::cout << "clauses " << df.formula.size() << " -> " << s.core.size()
                  << (s.unsat ? " (unsatisfiable)" : "") << "\n";
    });

    // reencode
    std::string re_in, re_out, re_map, re_report, re_method = "auto";
    bool re_mono = false;
    std::uint64_t re_seed = 0;
    auto* re = app.add_subcommand("reencode", "Reencode a width-2 formula");
    re->add_option("input", re_in, "input DIMACS")->required();
    re->add_option("-o,--out", re_out, "output DIMACS, auxiliaries in a 'c aux' comment")
        ->required();
    re->add_option("--method", re_method, "direct, nechiporuk, heuristic, or auto")
        ->check(CLI::IsMember({"direct", "nechiporuk", "heuristic", "auto"}));
    re->add_flag("--monotone-only", re_mono,
                 "reencode only the all-negative binary fragment");
    re->add_option("--map", re_map, "simplification map (method auto only)");
    re->add_option("--report", re_report, "JSON report file");
    re->add_option("--seed", re_seed, "tie-break seed for --method heuristic (default 0)");
    re->callback([&] {
        const reenc::DimacsFile df = read_dimacs_file(re_in);
        const reenc::Formula& f = df.formula;
        if (!re_map.empty() && re_method != "auto")
            throw reenc::Error("--map requires --method auto");
        const auto t0 = std::chrono::steady_clock::now();
        reenc::Reencoding enc;
        std::string method = re_method;
        if (re_mono && re_method != "direct") {
            const reenc::FragmentSplit parts = reenc::split_binary_fragment(f);
            const reenc::Var first_aux = f.num_vars() + 1;
            reenc::Reencoding frag;
            if (re_method == "heuristic") {
                const reenc::Prn net =
                    reenc::run_heuristic(simple_net(parts.fragment), first_aux, re_seed);
                frag = {reenc::formula_of(net),
                        {net.aux.begin(), net.aux.end()}};
            } else {
                const reenc::Prn net =
                    reenc::nechiporuk_undirected(reenc::diagram_of(parts.fragment),
                                                 first_aux);
                frag = {reenc::formula_of(net),
                        {net.aux.begin(), net.aux.end()}};
            }
            enc.formula = parts.rest;
            enc.formula.declare_vars(f.num_vars());
            enc.formula.add_all(frag.formula.clauses());
            enc.aux = std::move(frag.aux);
            method += "+monotone-only";
        } else if (re_method == "direct") {
            enc = {f, df.aux};
        } else if (re_method == "nechiporuk") {
            enc = reenc::reencode_general(f, f.num_vars() + 1);
        } else if (re_method == "heuristic") {
            const reenc::Prn net = reenc::run_heuristic(simple_net(f),
                                                        f.num_vars() + 1, re_seed);
            enc = {reenc::formula_of(net), {net.aux.begin(), net.aux.end()}};
        } else {
            const reenc::AutoReencodeResult res = reenc::auto_reencode(f);
            enc = {res.formula, res.aux};
            if (!re_map.empty())
                write_text(re_map, reenc::write_simplification_map(res.simplification));
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      t0)
                .count();
        write_text(re_out, reenc::emit_dimacs(enc.formula, enc.aux));
        if (!re_report.empty()) {
            nlohmann::json j{{"method", method},
                             {"input_clauses", f.size()},
                             {"output_clauses", enc.formula.size()},
                             {"aux_added", enc.aux.size()},
                             {"millis", ms}};
            write_text(re_report, j.dump(2) + "\n");
        }
        std::cout << method << ": clauses " << f.size() << " -> "
                  << enc.formula.size() << ", aux " << enc.aux.size() << "\n";
    });

    // verify
    std::string ve_orig, ve_enc, ve_mode = "both";
    bool ve_from_comments = false;
    auto* ve = app.add_subcommand("verify", "Check an encoding against its source");
    ve->add_option("original", ve_orig, "source DIMACS")->required();
    ve->add_option("encoding", ve_enc, "encoding DIMACS")->required();
    ve->add_option("--mode", ve_mode,
                   "dp (resolve auxiliaries away), truth (exhaustive), or both")
        ->check(CLI::IsMember({"dp", "truth", "both"}));
    ve->add_flag("--aux-from-comments", ve_from_comments,
                 "take auxiliaries from the encoding's 'c aux' comment (the default)");
    ve->callback([&] {
        const reenc::DimacsFile orig = read_dimacs_file(ve_orig);
        const reenc::DimacsFile enc = read_dimacs_file(ve_enc);
        if (ve_mode != "truth") {
            if (reenc::recovers_exactly(orig.formula, enc.formula, enc.aux)) {
                std::cout << "dp: ok\n";
            } else {
                std::cout << "dp: MISMATCH, eliminating the auxiliaries does not "
                             "restore the original clause set\n";
                rc = 1;
            }
        }
        if (ve_mode == "truth" ||
            (ve_mode == "both" && orig.formula.num_vars() <= 20)) {
            const auto mm =
                reenc::check_encoding(orig.formula, enc.formula, enc.aux);
            if (!mm) {
                std::cout << "truth: ok\n";
            } else {
                std::cout << "truth: MISMATCH, " << mm->describe() << "\n";
                rc = 1;
            }
        } else if (ve_mode == "both") {
            std::cerr << "truth check skipped: more than 20 source variables\n";
        }
    });

    // gen
    std::string ge_kind = "indepset";
    std::size_t ge_n = 100;
    double ge_p = 0.5;
    std::uint64_t ge_seed = 0;
    std::string ge_regime = "sat", ge_out;
    std::int64_t ge_k = -1;
    auto* ge = app.add_subcommand("gen", "Generate a benchmark instance");
    ge->add_option("kind", ge_kind, "instance family (indepset)")
        ->check(CLI::IsMember({"indepset"}));
    ge->add_option("--n", ge_n, "variables")->required();
    ge->add_option("--p,--density", ge_p, "exclusion edge probability (default 0.5)");
    ge->add_option("--seed", ge_seed, "random seed (default 0)");
    ge->add_option("--regime", ge_regime, "sat or unsat threshold schedule")
        ->check(CLI::IsMember({"sat", "unsat"}));
    ge->add_option("--k", ge_k, "explicit threshold, overrides --regime");
    ge->add_option("-o,--out", ge_out, "output DIMACS")->required();
    ge->callback([&] {
        const reenc::Formula frag = reenc::gen_exclusions(ge_n, ge_p, ge_seed);
        const std::size_t k = ge_k >= 0 ? static_cast<std::size_t>(ge_k)
                                        : reenc::regime_k(ge_n, ge_regime == "unsat");
        const reenc::Reencoding counter =
            reenc::count_at_least(range_vars(ge_n), k, static_cast<reenc::Var>(ge_n) + 1);
        reenc::Formula inst = frag;
        inst.declare_vars(static_cast<reenc::Var>(ge_n));
        inst.add_all(counter.formula.clauses());
        write_text(ge_out, reenc::emit_dimacs(inst, counter.aux));
        std::cout << "n " << ge_n << ", k " << k << ", clauses " << inst.size() << "\n";
    });

    // amo
    std::size_t am_n = 0;
    std::string am_encoding = "ladder", am_out;
    auto* am = app.add_subcommand("amo", "Emit an at-most-one encoding over x1..xn");
    am->add_option("--n", am_n, "variables")->required();
    am->add_option("--encoding", am_encoding, "direct, ladder, or product")
        ->check(CLI::IsMember({"direct", "ladder", "product"}));
    am->add_option("-o,--out", am_out, "output DIMACS")->required();
    am->callback([&] {
        const std::vector<reenc::Var> xs = range_vars(am_n);
        reenc::Reencoding enc;
        if (am_encoding == "ladder")
            enc = reenc::amo_ladder(xs, static_cast<reenc::Var>(am_n) + 1);
        else if (am_encoding == "product")
            enc = reenc::amo_product(xs, static_cast<reenc::Var>(am_n) + 1);
        else
            enc = {reenc::at_most_one_direct(xs), {}};
        write_text(am_out, reenc::emit_dimacs(enc.formula, enc.aux));
        std::cout << am_encoding << ": clauses " << enc.formula.size() << ", aux "
                  << enc.aux.size() << "\n";
    });

    // stats
    std::string st_in;
    auto* st = app.add_subcommand("stats", "Describe a DIMACS formula");
    st->add_option("input", st_in, "input DIMACS")->required();
    st->callback([&] {
        const reenc::DimacsFile df = read_dimacs_file(st_in);
        const reenc::Formula& f = df.formula;
        std::cout << "vars " << f.num_vars() << ", clauses " << f.size() << ", aux "
                  << df.aux.size() << "\n";
        std::size_t w1 = 0, w2 = 0, w3 = 0, wmore = 0;
        std::size_t negneg = 0, pospos = 0, mixed = 0;
        for (const reenc::Clause& c : f.clauses()) {
            switch (c.width()) {
                case 1: ++w1; break;
                case 2: ++w2; break;
                case 3: ++w3; break;
                default: ++wmore; break;
            }
            if (c.width() == 2) {
                const bool p0 = c.lits()[0].positive(), p1 = c.lits()[1].positive();
                if (!p0 && !p1)
                    ++negneg;
                else if (p0 && p1)
                    ++pospos;
                else
                    ++mixed;
            }
        }
        std::cout << "widths: 1*" << w1 << " 2*" << w2 << " 3*" << w3 << " wider*"
                  << wmore << "\n";
        std::cout << "width-2 split: both-negative " << negneg << ", both-positive "
                  << pospos << ", mixed " << mixed << "\n";
        if (f.max_width() <= 2 && w1 == 0 && !f.empty()) {
            const auto v = reenc::is_simple(f);
            std::cout << "simple: " << (v ? "no, " + v->describe() : "yes") << "\n";
        } else {
            std::cout << "simple: not applicable\n";
        }
    });

    // bench
    reenc::BenchOptions bo;
    std::vector<std::size_t> be_sizes;
    std::string be_regime = "sat", be_csv, be_json;
    auto* be = app.add_subcommand("bench", "Reencode benchmark instances and report");
    be->add_option("--sizes", be_sizes, "instance sizes (default 600)");
    be->add_option("--n", bo.n, "single size, alternative to --sizes");
    be->add_option("--p,--density", bo.density, "exclusion edge probability (default 0.5)");
    be->add_option("--trials", bo.trials, "trials per size (default 1)");
    be->add_option("--seed", bo.seed, "base seed (default 0)");
    be->add_option("--regime", be_regime, "sat or unsat threshold schedule")
        ->check(CLI::IsMember({"sat", "unsat"}));
    be->add_option("--solver", bo.solver, "external DIMACS solver to time (optional)");
    be->add_option("--timeout", bo.solver_timeout_s, "solver timeout in seconds");
    be->add_flag("!--no-audit", bo.audit, "skip the exact-recovery audit");
    be->add_option("--csv", be_csv, "write rows as CSV");
    be->add_option("--json", be_json, "write rows as JSON");
    be->callback([&] {
        bo.unsat_regime = be_regime == "unsat";
        if (be_sizes.empty()) be_sizes.push_back(bo.n);
        std::vector<reenc::BenchRow> rows;
        for (std::size_t n : be_sizes) {
            reenc::BenchOptions o = bo;
            o.n = n;
            const std::vector<reenc::BenchRow> part = reenc::run_bench(o);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        for (const reenc::BenchRow& r : rows) {
            std::cout << "n " << r.n << ", k " << r.k << ": fragment "
                      << r.fragment_clauses << " -> " << r.reencoded_clauses
                      << " clauses (aux " << r.aux_added << ", "
                      << r.reencode_ms << " ms)";
            if (r.audited) std::cout << ", audited";
            if (r.before.status != "skipped")
                std::cout << ", solve " << r.before.status << " " << r.before.seconds
                          << "s -> " << r.after.status << " " << r.after.seconds << "s";
            std::cout << "\n";
        }
        if (!be_csv.empty()) write_text(be_csv, reenc::rows_to_csv(rows));
        if (!be_json.empty()) write_text(be_json, reenc::rows_to_json(rows));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const reenc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
