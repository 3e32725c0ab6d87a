#include "stc/solve.hpp"

#include <algorithm>

#include "stc/congestion.hpp"
#include "stc/dtc.hpp"
#include "stc/errors.hpp"
#include "stc/fes.hpp"
#include "stc/tw_dp.hpp"
#include "stc/vi.hpp"
#include "stc/winwin.hpp"

namespace stc {

Algorithm parse_algorithm(const std::string& name) {
    if (name == "auto") return Algorithm::Auto;
    if (name == "trivial") return Algorithm::Trivial;
    if (name == "cycle") return Algorithm::Cycle;
    if (name == "oracle") return Algorithm::Oracle;
    if (name == "fes") return Algorithm::Fes;
    if (name == "dtc") return Algorithm::Dtc;
    if (name == "vi") return Algorithm::Vi;
    if (name == "dp") return Algorithm::Dp;
    if (name == "approx") return Algorithm::Approx;
    if (name == "winwin") return Algorithm::WinWin;
    throw InvalidInput("unknown algorithm '" + name + "'");
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::Auto: return "auto";
    case Algorithm::Trivial: return "trivial";
    case Algorithm::Cycle: return "cycle";
    case Algorithm::Oracle: return "oracle";
    case Algorithm::Fes: return "fes";
    case Algorithm::Dtc: return "dtc";
    case Algorithm::Vi: return "vi";
    case Algorithm::Dp: return "dp";
    case Algorithm::Approx: return "approx";
    case Algorithm::WinWin: return "winwin";
    }
    return "?";
}

namespace {

bool is_cycle(const Graph& g) {
    if (g.n() < 3 || g.m() != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool clique_modulator(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    std::vector<int> c;
    for (int v = 0; v < g.n(); ++v)
        if (!in[v]) c.push_back(v);
    if (c.empty()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!g.has_edge(c[i], c[j])) return false;
    return true;
}

NiceTreeDecomposition decomposition_for(const Graph& g, const SolveConfig& cfg) {
    if (!cfg.decomposition) return nice_decomposition(g);
    if (auto why = validate_td(g, *cfg.decomposition)) throw InvalidInput("invalid decomposition: " + *why);
    return make_nice(*cfg.decomposition);
}

Algorithm pick(const Graph& g, const SolveConfig& cfg) {
    if (cfg.algorithm != Algorithm::Auto) return cfg.algorithm;
    if (is_tree(g)) return Algorithm::Trivial;
    if (is_cycle(g)) return Algorithm::Cycle;
    if (cfg.clique_width && cfg.k) return Algorithm::WinWin;
    if (cfg.modulator) return clique_modulator(g, *cfg.modulator) ? Algorithm::Dtc : Algorithm::Vi;
    if (g.n() <= cfg.limits.oracle_max_n) return Algorithm::Oracle;
    if (feedback_edge_number(g) <= cfg.limits.fes_max) return Algorithm::Fes;
    return Algorithm::Dp;
}

SolveOutcome finish(const Graph& g, const SolveConfig& cfg, Algorithm alg, SpanningTree t, bool optimal) {
    SolveOutcome out;
    out.algorithm = alg;
    out.k = g.n() > 1 ? congestion_report(g, t).max_congestion : 0;
    if (cfg.k && out.k > *cfg.k) {
        // An optimum above the threshold refutes it.
        out.answer = Answer::No;
        out.certified = optimal;
        out.k = *cfg.k;
        out.note = "minimum congestion exceeds k";
        return out;
    }
    out.tree = std::move(t);
    out.certified = optimal;
    return out;
}

} // namespace

SolveOutcome solve(const Graph& g, const SolveConfig& cfg) {
    if (g.n() == 0) throw InvalidInput("empty graph");
    if (!is_connected(g)) throw Disconnected();
    if (cfg.k && *cfg.k < 0) throw InvalidInput("k must be non-negative");
    Algorithm alg = pick(g, cfg);

    switch (alg) {
    case Algorithm::Trivial: {
        if (!is_tree(g)) throw InvalidInput("the trivial solver needs a tree");
        return finish(g, cfg, alg, SpanningTree(g, g.edges()), true);
    }
    case Algorithm::Cycle: {
        if (!is_cycle(g)) throw InvalidInput("the cycle solver needs a cycle");
        std::vector<Edge> e(g.edges().begin() + 1, g.edges().end());
        return finish(g, cfg, alg, SpanningTree(g, e), true);
    }
    case Algorithm::Oracle: {
        auto o = stc_exact(g, cfg.budget, cfg.threads);
        return finish(g, cfg, alg, o.tree, true);
    }
    case Algorithm::Fes: {
        auto r = solve_fes(g, cfg.budget, cfg.threads);
        return finish(g, cfg, alg, r.tree, true);
    }
    case Algorithm::Dtc: {
        if (!cfg.modulator) throw InvalidInput("dtc needs a modulator");
        DtcOptions o{cfg.budget, cfg.threads, false};
        auto r = solve_dtc(g, *cfg.modulator, o);
        return finish(g, cfg, alg, r.tree, true);
    }
    case Algorithm::Vi: {
        if (!cfg.modulator) throw InvalidInput("vi needs a modulator");
        VIOptions o;
        o.budget = cfg.budget;
        o.threads = cfg.threads;
        o.max_component = cfg.limits.vi_max_component;
        auto r = solve_vi(g, *cfg.modulator, o);
        return finish(g, cfg, alg, r.tree, true);
    }
    case Algorithm::Dp: {
        auto ntd = decomposition_for(g, cfg);
        if (cfg.k) {
            SolveOutcome out;
            out.algorithm = alg;
            auto t = solve_exact_tw(g, *cfg.k, ntd);
            if (!t) {
                out.answer = Answer::No;
                out.k = *cfg.k;
                out.certified = true;
                out.note = "no spanning tree with congestion at most k";
                return out;
            }
            out.tree = *t;
            out.k = g.n() > 1 ? congestion_report(g, *t).max_congestion : 0;
            return out;
        }
        auto r = solve_stc_tw(g, ntd);
        return finish(g, cfg, alg, r.tree, true);
    }
    case Algorithm::Approx: {
        auto ntd = decomposition_for(g, cfg);
        auto r = solve_approx_tw(g, cfg.eps, ntd);
        return finish(g, cfg, alg, r.tree, false);
    }
    case Algorithm::WinWin: {
        if (!cfg.k || !cfg.clique_width) throw InvalidInput("winwin needs --k and --cw");
        auto r = solve_cw_winwin(g, *cfg.k, *cfg.clique_width);
        SolveOutcome out;
        out.algorithm = alg;
        if (r.answer == WinWinAnswer::Yes) {
            out.tree = *r.tree;
            out.k = congestion_report(g, *r.tree).max_congestion;
            return out;
        }
        out.answer = Answer::No;
        out.k = *cfg.k;
        out.certified = true;
        out.note = r.answer == WinWinAnswer::NoByBiclique ? "contains K_{k+1,k+1}" : "no spanning tree with congestion at most k";
        return out;
    }
    case Algorithm::Auto: break;
    }
    throw std::logic_error("unreachable");
}

} // namespace stc
