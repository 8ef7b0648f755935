#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relax/errors.hpp"
#include "relax/io.hpp"
#include "relax/records.hpp"
#include "relax/reductions.hpp"
#include "relax/solvers.hpp"
#include "relax/verify.hpp"

namespace relax {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_budget = 3 };

namespace cli_detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "auto";
    std::optional<std::uint64_t> budget;
};

inline SolveOptions solve_options(Common const& c) {
    SolveOptions opt;
    if (char const* env = std::getenv("RELAX_BUDGET")) {
        try {
            opt.budget = std::stoull(env);
        } catch (std::exception const&) {
            throw UsageError(std::string("RELAX_BUDGET is not a non-negative integer: '") + env + "'");
        }
    }
    if (c.budget) opt.budget = *c.budget;
    return opt;
}

inline GraphFormat input_format(std::string const& flag, std::string const& path) {
    return flag == "auto" ? format_for_path(path) : parse_format(flag);
}

inline Graph load_graph(std::string const& path, std::string const& format) {
    GraphFormat const f = input_format(format, path);
    if (path == "-") return parse_graph(std::cin, f);
    return read_graph_file(path, f);
}

inline Gamma gamma_or_throw(std::optional<std::string> const& text, char const* what) {
    if (!text) throw UsageError(std::string(what) + " requires --gamma A/B");
    return Gamma::parse(*text);
}

struct SolveArgs {
    Common common;
    std::string problem;
    std::size_t k = 0;
    std::optional<Distance> s;
    std::optional<std::string> gamma;
    std::string method = "auto";
    bool timing = false;
    std::string file;
};

inline ProblemSpec problem_spec(std::string const& problem, std::size_t k, std::optional<Distance> s,
                                std::optional<std::string> const& gamma) {
    bool const distance = problem == "s-club" || problem == "s-clique";
    if (distance && !s) throw UsageError(problem + " requires --s");
    if (!distance && s) throw UsageError("--s conflicts with --problem " + problem);
    if (problem != "gcs" && gamma) throw UsageError("--gamma conflicts with --problem " + problem);
    if (problem == "clique") return ProblemSpec::clique(k);
    if (problem == "s-club") return ProblemSpec::s_club(*s, k);
    if (problem == "s-clique") return ProblemSpec::s_clique(*s, k);
    if (problem == "gcs") return ProblemSpec::gcs(gamma_or_throw(gamma, "gcs"), k);
    throw UsageError("unknown problem '" + problem + "'");
}

/// Methods each problem accepts; the first entry is what "auto" means.
inline std::vector<std::string> methods_for(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::clique: return {"bb"};
    case ProblemKind::s_club: return {"bb", "forest"};
    case ProblemKind::s_clique: return {"power", "forest"};
    case ProblemKind::gcs: return {"brute", "xp-degeneracy", "xp-ell"};
    }
    return {};
}

inline SolveOutcome run_solver(Graph const& g, ProblemSpec const& spec, std::string method, SolveOptions const& opt) {
    auto const allowed = methods_for(spec.kind);
    if (method == "auto") method = allowed.front();
    if (std::find(allowed.begin(), allowed.end(), method) == allowed.end())
        throw UsageError("--method " + method + " conflicts with --problem " + std::string(to_string(spec.kind)));
    if (method == "forest") {
        try {
            return solve_forest(g, spec.k, spec.s);
        } catch (NotAForest const& e) {
            throw UsageError(e.what());
        }
    }
    switch (spec.kind) {
    case ProblemKind::clique: return solve_clique(g, spec.k, opt);
    case ProblemKind::s_club: return solve_s_club(g, spec.k, spec.s, opt);
    case ProblemKind::s_clique: return solve_s_clique(g, spec.k, spec.s, opt);
    case ProblemKind::gcs: {
        GcsStrategy const st = method == "brute"           ? GcsStrategy::brute
                               : method == "xp-degeneracy" ? GcsStrategy::xp_degeneracy
                                                           : GcsStrategy::xp_ell;
        return solve_gcs(g, spec.k, spec.gamma, st, opt);
    }
    }
    throw UsageError("unsupported problem");
}

inline int cmd_solve(SolveArgs const& a, std::ostream& out) {
    Graph const g = load_graph(a.file, a.common.format);
    ProblemSpec const spec = problem_spec(a.problem, a.k, a.s, a.gamma);
    SolveOutcome const res = run_solver(g, spec, a.method, solve_options(a.common));
    out << to_json(make_result_record(spec, g, res, a.timing)).dump(2) << '\n';
    return exit_ok;
}

struct ReduceArgs {
    Common common;
    std::string target;
    std::size_t k = 0;
    std::optional<Distance> s;
    std::optional<std::string> gamma;
    bool normalize = false;
    std::optional<std::string> out_prefix;
    std::string out_format = "edgelist";
    std::string file;
};

inline ReductionArtifact build_artifact(Graph g, std::string const& target, std::size_t k, std::optional<Distance> s,
                                        std::optional<std::string> const& gamma_text, bool normalize) {
    ReductionKind const kind = parse_reduction_kind(target);
    bool const distance = kind == ReductionKind::club_odd || kind == ReductionKind::club_even;
    if (distance && !s) throw UsageError(target + " requires --s");
    if (distance && gamma_text) throw UsageError("--gamma conflicts with --target " + target);
    if (!distance && s) throw UsageError("--s conflicts with --target " + target);
    if (distance && normalize) throw UsageError("--normalize applies to gcs targets only");
    Gamma const gamma = distance ? Gamma{} : gamma_or_throw(gamma_text, target.c_str());
    if (normalize) {
        auto norm = normalize_k_gcs(g, k, gamma, kind == ReductionKind::gcs_ell ? NormalizeMode::ell : NormalizeMode::degeneracy);
        g = std::move(norm.graph);
        k = norm.k;
    }
    try {
        return reduce(kind, g, k, s.value_or(0), gamma);
    } catch (ReductionError const& e) {
        throw UsageError(e.what());
    }
}

inline int cmd_reduce(ReduceArgs const& a, std::ostream& out) {
    Graph const g = load_graph(a.file, a.common.format);
    ReductionArtifact const art = build_artifact(g, a.target, a.k, a.s, a.gamma, a.normalize);
    Json const j = artifact_to_json(art);
    if (!a.out_prefix) {
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    GraphFormat const gf = parse_format(a.out_format);
    std::string const graph_path = *a.out_prefix + (gf == GraphFormat::dimacs ? ".col" : ".edgelist");
    std::string const json_path = *a.out_prefix + ".json";
    std::ofstream graph_out(graph_path), json_out(json_path);
    if (!graph_out || !json_out) throw std::runtime_error("cannot write under prefix " + *a.out_prefix);
    graph_out << format_graph(art.gprime, gf);
    json_out << j.dump(2) << '\n';
    out << Json{{"graph", graph_path}, {"sidecar", json_path}, {"kprime", art.kprime}}.dump(2) << '\n';
    return exit_ok;
}

struct VerifyArgs {
    Common common;
    std::string suite = "all";
    std::optional<std::string> target;
    std::optional<std::size_t> k;
    std::optional<Distance> s;
    std::optional<std::string> gamma;
    bool normalize = false;
    std::string file;
};

inline std::vector<ClaimReport> run_suite(ReductionArtifact const& art, std::string const& suite, SolveOptions const& opt) {
    bool const distance = art.kind == ReductionKind::club_odd || art.kind == ReductionKind::club_even;
    std::vector<ClaimReport> out;
    auto append = [&](std::vector<ClaimReport> more) { out.insert(out.end(), more.begin(), more.end()); };
    if (suite == "distance" || suite == "all") {
        if (distance) append(check_distance_claims(art));
        else if (suite == "distance") throw UsageError("distance suite applies to club-odd/club-even artifacts only");
    }
    if (suite == "structure" || suite == "all") append(check_structure(art));
    if (suite == "roundtrip" || suite == "all")
        out.push_back(roundtrip_equivalence(art.source, art.k, art.kind, art.params.s.value_or(0),
                                            art.params.gamma.value_or(Gamma{}), opt));
    return out;
}

inline int cmd_verify(VerifyArgs const& a, std::ostream& out) {
    static std::vector<std::string> const suites{"distance", "structure", "roundtrip", "all"};
    if (std::find(suites.begin(), suites.end(), a.suite) == suites.end()) throw UsageError("unknown suite '" + a.suite + "'");
    bool const is_json = a.file.size() >= 5 && a.file.substr(a.file.size() - 5) == ".json";
    ReductionArtifact art;
    if (is_json) {
        if (a.target || a.k || a.s || a.gamma || a.normalize)
            throw UsageError("construction flags conflict with an artifact input");
        std::ifstream in(a.file);
        if (!in) throw ParseError("cannot open '" + a.file + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (nlohmann::json::exception const& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        art = artifact_from_json(j);
    } else {
        if (!a.target || !a.k) throw UsageError("a source graph needs --target and --k");
        art = build_artifact(load_graph(a.file, a.common.format), *a.target, *a.k, a.s, a.gamma, a.normalize);
    }
    auto const reports = run_suite(art, a.suite, solve_options(a.common));
    Json context = {{"kind", std::string(to_string(art.kind))}, {"k", art.k}, {"kprime", art.kprime},
                    {"suite", a.suite}, {"gprime_digest", graph_digest(art.gprime)}};
    out << claims_to_json(reports, std::move(context)).dump(2) << '\n';
    bool const any_fail = std::any_of(reports.begin(), reports.end(), [](auto const& r) { return r.status == ClaimStatus::fail; });
    bool const any_skip = std::any_of(reports.begin(), reports.end(), [](auto const& r) { return r.status == ClaimStatus::skipped; });
    return any_fail ? exit_check_failed : any_skip ? exit_budget : exit_ok;
}

struct GenArgs {
    std::string kind;
    std::size_t n = 0;
    std::optional<double> p;
    std::optional<std::size_t> m;
    std::uint64_t seed = 0;
    std::string format = "edgelist";
};

inline int cmd_gen(GenArgs const& a, std::ostream& out) {
    GenKind const kind = parse_gen_kind(a.kind);
    double param = 0.0;
    if (kind == GenKind::gnm) {
        if (!a.m || a.p) throw UsageError("gnm takes --m and no --p");
        param = static_cast<double>(*a.m);
    } else if (kind == GenKind::tree) {
        if (a.m || a.p) throw UsageError("tree takes neither --p nor --m");
    } else {
        if (!a.p || a.m) throw UsageError(a.kind + " takes --p and no --m");
        param = *a.p;
    }
    GraphFormat const f = parse_format(a.format);
    Graph const g = gen_random(kind, a.n, param, a.seed);
    std::ostringstream header;
    header << "gen " << a.kind << " n=" << a.n;
    if (a.p) header << " p=" << *a.p;
    if (a.m) header << " m=" << *a.m;
    header << " seed=" << a.seed;
    out << (f == GraphFormat::dimacs ? "c " : "# ") << header.str() << '\n' << format_graph(g, f);
    return exit_ok;
}

inline int cmd_stats(Common const& c, std::string const& file, std::ostream& out) {
    Graph const g = load_graph(file, c.format);
    Json j = {{"schema_version", schema_version}, {"tool_version", tool_version}, {"input_digest", graph_digest(g)}};
    j["stats"] = to_json(graph_stats(g));
    std::uint64_t degree_sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) degree_sum += g.degree(v);
    j["stats"]["degree_sum"] = degree_sum;
    out << j.dump(2) << '\n';
    return exit_ok;
}

struct BenchArgs {
    Common common;
    std::string problem;
    std::size_t k = 0;
    std::optional<Distance> s;
    std::optional<std::string> gamma;
    std::vector<std::string> files;
    std::size_t gen_n = 0;
    double gen_p = 0.3;
    std::size_t count = 0;
    std::uint64_t seed = 1;
};

/// Tab-separated timing table: every applicable method on every instance.
inline int cmd_bench(BenchArgs const& a, std::ostream& out) {
    ProblemSpec const spec = problem_spec(a.problem, a.k, a.s, a.gamma);
    SolveOptions const opt = solve_options(a.common);
    std::vector<std::pair<std::string, Graph>> instances;
    for (auto const& f : a.files) instances.emplace_back(f, load_graph(f, a.common.format));
    for (std::size_t i = 0; i < a.count; ++i)
        instances.emplace_back("gnp:n=" + std::to_string(a.gen_n) + ":seed=" + std::to_string(a.seed + i),
                               gen_random(GenKind::gnp, a.gen_n, a.gen_p, a.seed + i));
    if (instances.empty()) throw UsageError("bench needs FILE arguments or --count with --n");
    out << "instance\tn\tm\tmethod\tdecision\tnodes\tmillis\n";
    bool budget_hit = false;
    for (auto const& [name, g] : instances)
        for (auto const& method : methods_for(spec.kind)) {
            if (method == "forest" && degeneracy_order(g).bound > 1) continue;
            out << name << '\t' << g.num_vertices() << '\t' << g.num_edges() << '\t' << method << '\t';
            try {
                SolveOutcome const r = run_solver(g, spec, method, opt);
                out << (r.decision ? "yes" : "no") << '\t' << r.nodes << '\t'
                    << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << '\n';
            } catch (BudgetExceeded const&) {
                budget_hit = true;
                out << "budget\t-\t-\n";
            }
        }
    return budget_hit ? exit_budget : exit_ok;
}

} // namespace cli_detail

/// Runs one command line (without the program name). Records go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"Exact solvers, reductions and claim checks for clique relaxations", "relaxctl"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    auto add_common = [](CLI::App* sub, Common& c) {
        sub->add_option("--format", c.format, "Input format: auto, dimacs, edgelist")->capture_default_str();
        sub->add_option("--budget", c.budget, "Search-node budget (overrides RELAX_BUDGET)");
    };

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Decide one problem instance and emit a result record");
    add_common(solve, sa.common);
    solve->add_option("--problem", sa.problem)->required()->check(CLI::IsMember({"clique", "s-club", "s-clique", "gcs"}));
    solve->add_option("--k", sa.k)->required();
    solve->add_option("--s", sa.s);
    solve->add_option("--gamma", sa.gamma, "Exact fraction A/B");
    solve->add_option("--method", sa.method)
        ->check(CLI::IsMember({"auto", "brute", "bb", "power", "forest", "xp-degeneracy", "xp-ell"}))
        ->capture_default_str();
    solve->add_flag("--timing", sa.timing, "Include wall-clock millis in the record");
    solve->add_option("file", sa.file)->required();

    ReduceArgs ra;
    auto* red = app.add_subcommand("reduce", "Build a reduction artifact from a Clique instance");
    add_common(red, ra.common);
    red->add_option("--target", ra.target)->required()->check(CLI::IsMember({"club-odd", "club-even", "gcs-degeneracy", "gcs-ell"}));
    red->add_option("--k", ra.k)->required();
    red->add_option("--s", ra.s);
    red->add_option("--gamma", ra.gamma, "Exact fraction A/B");
    red->add_flag("--normalize", ra.normalize, "Pad with universal vertices until k fits the gcs target");
    red->add_option("--out", ra.out_prefix, "Write PREFIX.<ext> and PREFIX.json instead of printing JSON");
    red->add_option("--out-format", ra.out_format)->check(CLI::IsMember({"dimacs", "edgelist"}))->capture_default_str();
    red->add_option("file", ra.file)->required();

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Run claim checks on an artifact (.json) or a source graph");
    add_common(ver, va.common);
    ver->add_option("--suite", va.suite, "Checks to run")->capture_default_str()->check(CLI::IsMember({"distance", "structure", "roundtrip", "all"}));
    ver->add_option("--target", va.target, "Construction to build when FILE is a source graph")->check(CLI::IsMember({"club-odd", "club-even", "gcs-degeneracy", "gcs-ell"}));
    ver->add_option("--k", va.k);
    ver->add_option("--s", va.s);
    ver->add_option("--gamma", va.gamma);
    ver->add_flag("--normalize", va.normalize);
    ver->add_option("file", va.file)->required();

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Emit a seeded random graph");
    gen->add_option("--kind", ga.kind)->required()->check(CLI::IsMember({"gnp", "gnm", "tree", "forest"}));
    gen->add_option("--n", ga.n)->required();
    gen->add_option("--p", ga.p, "Edge probability (gnp) or removal probability (forest)");
    gen->add_option("--m", ga.m, "Edge count (gnm)");
    gen->add_option("--seed", ga.seed)->capture_default_str();
    gen->add_option("--format", ga.format)->check(CLI::IsMember({"dimacs", "edgelist"}))->capture_default_str();

    Common stc;
    std::string stats_file;
    auto* st = app.add_subcommand("stats", "Emit degree, degeneracy and distance statistics");
    add_common(st, stc);
    st->add_option("file", stats_file)->required();

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Time every applicable method on files or generated G(n,p) graphs");
    add_common(bench, ba.common);
    bench->add_option("--problem", ba.problem)->required()->check(CLI::IsMember({"clique", "s-club", "s-clique", "gcs"}));
    bench->add_option("--k", ba.k)->required();
    bench->add_option("--s", ba.s);
    bench->add_option("--gamma", ba.gamma);
    bench->add_option("--n", ba.gen_n);
    bench->add_option("--p", ba.gen_p)->capture_default_str();
    bench->add_option("--count", ba.count);
    bench->add_option("--seed", ba.seed)->capture_default_str();
    bench->add_option("files", ba.files);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (solve->parsed()) return cmd_solve(sa, out);
        if (red->parsed()) return cmd_reduce(ra, out);
        if (ver->parsed()) return cmd_verify(va, out);
        if (gen->parsed()) return cmd_gen(ga, out);
        if (st->parsed()) return cmd_stats(stc, stats_file, out);
        if (bench->parsed()) return cmd_bench(ba, out);
    } catch (BudgetExceeded const& e) {
        err << "relaxctl: " << e.what() << '\n';
        return exit_budget;
    } catch (SoundnessError const& e) {
        err << "relaxctl: " << e.what() << '\n';
        return exit_check_failed;
    } catch (std::exception const& e) {
        // Usage, parse, gamma and reduction-precondition errors.
        err << "relaxctl: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace relax
