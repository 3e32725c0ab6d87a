#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stc/congestion.hpp"
#include "stc/decomposition.hpp"
#include "stc/errors.hpp"
#include "stc/fes.hpp"
#include "stc/generators.hpp"
#include "stc/graph_io.hpp"
#include "stc/oracle.hpp"
#include "stc/solution_io.hpp"
#include "stc/solve.hpp"

using namespace stc;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kBudget = 3 };

struct Common {
    std::string input, output, td_path, modulator_path, alg = "auto", eps_text;
    std::int64_t k = -1;
    int cw = 0, threads = 1;
    std::uint64_t max_trees = 0;
    std::int64_t max_millis = 0;
    std::uint64_t seed = 1;
    bool json = false;
};

Common opt;

EnumerationBudget budget() {
    EnumerationBudget b = EnumerationBudget::from_env();
    if (opt.max_trees) b.max_trees = opt.max_trees;
    if (opt.max_millis) b.max_millis = opt.max_millis;
    return b;
}

void emit(const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        write_text_file(opt.output, text);
    }
}

int report_error(const std::string& kind, const std::string& message, int code) {
    if (opt.json) {
        ordered_json j;
        j["error"] = kind;
        j["message"] = message;
        std::cerr << j.dump() << "\n";
    } else {
        std::cerr << "stc: " << kind << ": " << message << "\n";
    }
    return code;
}

GrFile load_graph() { return read_gr_file(opt.input); }

int print_outcome(const Graph& g, const SolveOutcome& out) {
    if (out.answer == Answer::Yes) {
        auto sol = make_solution(DoubleWeightedGraph(g), *out.tree, algorithm_name(out.algorithm), out.certified);
        // Never report a tree that does not re-evaluate to its claim.
        if (auto why = verify_solution(DoubleWeightedGraph(g), sol)) throw VerificationError(*why);
        emit(solution_to_json(sol));
        if (!opt.output.empty() && !opt.json) std::cout << "k = " << sol.k << "\n";
        return kOk;
    }
    ordered_json j;
    j["answer"] = "no";
    j["k"] = out.k;
    j["algorithm"] = algorithm_name(out.algorithm);
    j["certified"] = out.certified;
    j["reason"] = out.note;
    emit(j.dump(2) + "\n");
    return kNo;
}

int run_solve(Algorithm forced) {
    GrFile f = load_graph();
    SolveConfig cfg;
    cfg.algorithm = forced == Algorithm::Auto ? parse_algorithm(opt.alg) : forced;
    if (opt.k >= 0) cfg.k = opt.k;
    if (opt.cw > 0) cfg.clique_width = opt.cw;
    cfg.threads = opt.threads;
    cfg.budget = budget();
    if (!opt.eps_text.empty()) cfg.eps = Rational::parse(opt.eps_text);
    if (!opt.modulator_path.empty()) cfg.modulator = read_vertex_list_file(opt.modulator_path, f.graph.graph.n());
    if (!opt.td_path.empty()) cfg.decomposition = parse_td(read_text_file(opt.td_path), f.graph.graph.n());

    if (f.weighted) {
        if (cfg.algorithm != Algorithm::Oracle && cfg.algorithm != Algorithm::Auto)
            throw InvalidInput("weighted graphs are only supported by the oracle");
        auto o = stc_exact(f.graph, cfg.budget, cfg.threads);
        if (cfg.k && o.k > *cfg.k) {
            SolveOutcome out;
            out.answer = Answer::No;
            out.k = *cfg.k;
            out.algorithm = Algorithm::Oracle;
            out.certified = true;
            out.note = "minimum congestion exceeds k";
            return print_outcome(f.graph.graph, out);
        }
        auto sol = make_solution(f.graph, o.tree, "oracle", true);
        emit(solution_to_json(sol));
        return kOk;
    }
    return print_outcome(f.graph.graph, solve(f.graph.graph, cfg));
}

int run_eval(const std::string& tree_path) {
    GrFile f = load_graph();
    Solution s = parse_solution_json(read_text_file(tree_path));
    if (auto why = verify_solution(f.graph, s)) {
        ordered_json j;
        j["valid"] = false;
        j["reason"] = *why;
        std::cout << j.dump(2) << "\n";
        return kNo;
    }
    Solution fresh = make_solution(f.graph, SpanningTree(f.graph.graph, s.edges), s.algorithm, s.certified);
    ordered_json j;
    j["valid"] = true;
    j["k"] = fresh.k;
    std::cout << j.dump(2) << "\n";
    return kOk;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

std::vector<Clause> parse_formula(const std::string& text) {
    std::vector<Clause> out;
    std::string part;
    std::stringstream ss(text);
    while (std::getline(ss, part, ',')) {
        std::stringstream cs(part);
        Clause c;
        int lit;
        while (cs >> lit) c.push_back(lit);
        if (!c.empty()) out.push_back(c);
    }
    return out;
}

int write_bundle(const InstanceBundle& b) {
    if (opt.output.empty()) {
        std::cout << write_gr(b.graph);
        std::cerr << bundle_to_json(b);
    } else {
        write_text_file(opt.output + ".gr", write_gr(b.graph));
        write_text_file(opt.output + ".json", bundle_to_json(b));
        if (b.expansion) write_text_file(opt.output + ".weighted.gr", write_gr(b.weighted));
    }
    return kOk;
}

int run_decompose(bool exact) {
    GrFile f = load_graph();
    auto td = decompose(f.graph.graph, exact ? DecompositionMode::ExactSmall : DecompositionMode::Heuristic);
    emit(write_td(td, f.graph.graph.n()));
    return kOk;
}

int run_reduce() {
    GrFile f = load_graph();
    const Graph& g = f.graph.graph;
    Reduction r = reduce_graph(g);
    ordered_json j;
    j["host_vertices"] = g.n();
    j["host_edges"] = g.m();
    j["fes"] = feedback_edge_number(g);
    j["cycle"] = r.trace.cycle;
    j["trivial"] = r.trace.trivial;
    j["degree_one"] = ordered_json::array();
    for (auto [v, a] : r.trace.degree_one) j["degree_one"].push_back({v + 1, a + 1});
    j["diamonds"] = ordered_json::array();
    for (const auto& d : r.trace.diamonds) {
        ordered_json e;
        e["case"] = d.kind == DiamondCase::Loop ? "loop" : d.kind == DiamondCase::ParallelToEdge ? "parallel" : "contract";
        e["path"] = ordered_json::array();
        for (int v : d.path) e["path"].push_back(v + 1);
        j["diamonds"].push_back(e);
    }
    j["host_vertex"] = ordered_json::array();
    for (int v : r.trace.host_vertex) j["host_vertex"].push_back(v + 1);
    j["edge_paths"] = ordered_json::array();
    for (const auto& p : r.trace.edge_paths) {
        auto arr = ordered_json::array();
        for (int v : p) arr.push_back(v + 1);
        j["edge_paths"].push_back(arr);
    }
    if (opt.output.empty()) {
        std::cout << write_gr(r.reduced);
        std::cerr << j.dump(2) << "\n";
    } else {
        write_text_file(opt.output + ".gr", write_gr(r.reduced));
        write_text_file(opt.output + ".trace.json", j.dump(2) + "\n");
    }
    return kOk;
}

int run_verify(const std::string& solution_path) {
    GrFile f = load_graph();
    const Graph& g = f.graph.graph;
    ordered_json j;
    j["graph"] = "ok";
    j["connected"] = is_connected(g);
    int code = kOk;
    if (!opt.td_path.empty()) {
        try {
            auto td = parse_td(read_text_file(opt.td_path), g.n());
            auto why = validate_td(g, td);
            j["decomposition"] = why ? *why : std::string("ok");
            if (why) code = kNo;
            else j["width"] = td.width();
        } catch (const ParseError& e) {
            j["decomposition"] = std::string("parse error: ") + e.what();
            code = kNo;
        }
    }
    if (!solution_path.empty()) {
        auto why = verify_solution(f.graph, parse_solution_json(read_text_file(solution_path)));
        j["solution"] = why ? *why : std::string("ok");
        if (why) code = kNo;
    }
    std::cout << j.dump(2) << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spanning tree congestion solvers, generators and checkers"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "Structured errors on stderr");
    app.add_option("--threads", opt.threads, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
    app.add_option("--max-trees", opt.max_trees, "Tree enumeration cap");
    app.add_option("--max-millis", opt.max_millis, "Enumeration wall-clock cap in ms");
    app.add_option("--seed", opt.seed, "Seed for randomised helpers");
    app.add_option("-o,--output", opt.output, "Output file (or prefix for gen/reduce)");

    auto* solve_cmd = app.add_subcommand("solve", "Minimum congestion tree, or a decision with --k");
    solve_cmd->add_option("graph", opt.input)->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--alg", opt.alg, "auto|trivial|cycle|oracle|fes|dtc|vi|dp|approx|winwin");
    solve_cmd->add_option("--k", opt.k, "Decision threshold");
    solve_cmd->add_option("--td", opt.td_path, "Tree decomposition (.td)")->check(CLI::ExistingFile);
    solve_cmd->add_option("--modulator", opt.modulator_path, "Vertex list for dtc/vi")->check(CLI::ExistingFile);
    solve_cmd->add_option("--cw", opt.cw, "Claimed clique-width (winwin)");
    solve_cmd->add_option("--eps", opt.eps_text, "Approximation parameter for --alg approx");

    auto* approx_cmd = app.add_subcommand("approx", "(1+eps)-approximate tree via the rounded DP");
    approx_cmd->add_option("graph", opt.input)->required()->check(CLI::ExistingFile);
    approx_cmd->add_option("--eps", opt.eps_text, "e.g. 0.5 or 1/10")->required();
    approx_cmd->add_option("--td", opt.td_path)->check(CLI::ExistingFile);

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive enumeration");
    oracle_cmd->add_option("graph", opt.input)->required()->check(CLI::ExistingFile);
    oracle_cmd->add_option("--k", opt.k);

    std::string tree_path;
    auto* eval_cmd = app.add_subcommand("eval", "Recompute a solution file's congestion");
    eval_cmd->add_option("graph", opt.input)->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("--tree", tree_path)->required()->check(CLI::ExistingFile);

    auto* gen_cmd = app.add_subcommand("gen", "Hardness constructions");
    gen_cmd->require_subcommand(1);
    int t = 3, bins_b = 0, side = 3;
    std::string items, family = "stars", formula;
    bool example = false;
    auto* ubp_cmd = gen_cmd->add_subcommand("ubp", "Unary bin packing construction");
    ubp_cmd->add_option("--t", t)->required();
    ubp_cmd->add_option("--items", items, "Comma-separated sizes")->required();
    ubp_cmd->add_option("--family", family, "stars|cliques");
    auto* tp_cmd = gen_cmd->add_subcommand("3part", "3-partition construction");
    tp_cmd->add_option("--items", items)->required();
    tp_cmd->add_option("--B", bins_b)->required();
    auto* bsat_cmd = gen_cmd->add_subcommand("bsat", "(3,B2)-SAT construction");
    bsat_cmd->add_option("--formula", formula, "Clauses separated by commas, literals by spaces");
    bsat_cmd->add_flag("--example", example, "Use the built-in 3-variable formula");
    auto* grid_cmd = gen_cmd->add_subcommand("grid", "n x n grid");
    grid_cmd->add_option("--n", side)->required();

    bool exact = false;
    auto* dec_cmd = app.add_subcommand("decompose", "Write a tree decomposition");
    dec_cmd->add_option("graph", opt.input)->required()->check(CLI::ExistingFile);
    dec_cmd->add_flag("--exact", exact, "Optimal width (n <= 12)");

    auto* red_cmd = app.add_subcommand("reduce", "Feedback-edge reduction and its trace");
    red_cmd->add_option("graph", opt.input)->required()->check(CLI::ExistingFile);

    std::string solution_path;
    auto* ver_cmd = app.add_subcommand("verify", "Validate graph, decomposition and solution files");
    ver_cmd->add_option("graph", opt.input)->required()->check(CLI::ExistingFile);
    ver_cmd->add_option("--td", opt.td_path)->check(CLI::ExistingFile);
    ver_cmd->add_option("--solution", solution_path)->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (opt.json) return report_error("usage", e.what(), kUsage);
        app.exit(e);
        return kUsage;
    }
    if (!opt.eps_text.empty() && !approx_cmd->parsed() && opt.alg != "approx")
        return report_error("usage", "--eps is only meaningful with approximation", kUsage);

    try {
        if (solve_cmd->parsed()) return run_solve(Algorithm::Auto);
        if (approx_cmd->parsed()) return run_solve(Algorithm::Approx);
        if (oracle_cmd->parsed()) return run_solve(Algorithm::Oracle);
        if (eval_cmd->parsed()) return run_eval(tree_path);
        if (ubp_cmd->parsed()) {
            if (family != "stars" && family != "cliques") throw InvalidInput("family must be stars or cliques");
            return write_bundle(gen_ubp(t, parse_int_list(items), family == "stars" ? UbpFamily::Stars : UbpFamily::Cliques));
        }
        if (tp_cmd->parsed()) return write_bundle(gen_3partition(parse_int_list(items), bins_b));
        if (bsat_cmd->parsed()) {
            if (example == !formula.empty()) throw InvalidInput("give exactly one of --formula and --example");
            return write_bundle(gen_bsat(example ? example_bsat_formula() : parse_formula(formula)));
        }
        if (grid_cmd->parsed()) {
            auto b = gen_grid(side, opt.seed);
            return write_bundle(b);
        }
        if (dec_cmd->parsed()) return run_decompose(exact);
        if (red_cmd->parsed()) return run_reduce();
        if (ver_cmd->parsed()) return run_verify(solution_path);
    } catch (const BudgetExceeded& e) {
        return report_error("budget", e.what(), kBudget);
    } catch (const ParseError& e) {
        return report_error("parse", e.what(), kUsage);
    } catch (const InvalidInput& e) {
        return report_error("input", e.what(), kUsage);
    } catch (const VerificationError& e) {
        return report_error("verification", e.what(), kNo);
    } catch (const std::exception& e) {
        return report_error("internal", e.what(), kUsage);
    }
    return kUsage;
}
