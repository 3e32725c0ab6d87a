#include "stc/fes.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "stc/congestion.hpp"
#include "stc/errors.hpp"

namespace stc {

namespace {

struct Chain {
    int u, v;
    std::vector<int> inner;
    int key() const { return *std::min_element(inner.begin(), inner.end()); }
};

} // namespace

Reduction reduce_graph(const Graph& g) {
    if (g.n() == 0) throw InvalidInput("empty graph");
    if (!is_connected(g)) throw Disconnected();
    Reduction out;
    ReductionTrace& tr = out.trace;

    std::vector<int> deg(g.n());
    std::vector<bool> gone(g.n(), false);
    std::priority_queue<int, std::vector<int>, std::greater<>> pq;
    for (int v = 0; v < g.n(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) pq.push(v);
    }
    int alive = g.n();
    while (!pq.empty() && alive > 1) {
        int v = pq.top();
        pq.pop();
        if (gone[v] || deg[v] != 1) continue;
        int attach = -1;
        for (int x : g.neighbors(v))
            if (!gone[x]) attach = x;
        gone[v] = true;
        --alive;
        tr.degree_one.emplace_back(v, attach);
        if (--deg[attach] == 1) pq.push(attach);
    }

    std::vector<int> core;
    for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) core.push_back(v);

    auto keep_core = [&]() {
        out.reduced = induced_subgraph(g, core);
        tr.host_vertex = core;
        for (const auto& [a, b] : out.reduced.edges()) tr.edge_paths.push_back({core[a], core[b]});
    };
    if (core.size() == 1) {
        tr.trivial = true;
        keep_core();
        return out;
    }
    bool all_two = std::all_of(core.begin(), core.end(), [&](int v) { return deg[v] == 2; });
    if (all_two) {
        tr.cycle = true;
        keep_core();
        return out;
    }

    // Maximal chains of degree-2 vertices between high-degree endpoints.
    std::vector<bool> seen(g.n(), false);
    std::vector<Chain> chains;
    std::vector<Edge> direct;
    for (int u : core) {
        if (deg[u] < 3) continue;
        for (int x : g.neighbors(u)) {
            if (gone[x]) continue;
            if (deg[x] >= 3) {
                if (u < x) direct.push_back({u, x});
                continue;
            }
            if (seen[x]) continue;
            Chain ch{u, -1, {}};
            int prev = u, cur = x;
            while (deg[cur] == 2) {
                seen[cur] = true;
                ch.inner.push_back(cur);
                int nxt = -1;
                for (int y : g.neighbors(cur))
                    if (!gone[y] && y != prev) nxt = y;
                // A 2-cycle cannot occur in a simple graph, so nxt is unique.
                prev = cur;
                cur = nxt;
            }
            ch.v = cur;
            chains.push_back(std::move(ch));
        }
    }
    std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) { return a.key() < b.key(); });

    std::vector<int> high;
    for (int v : core)
        if (deg[v] >= 3) high.push_back(v);
    std::vector<int> rid(g.n(), -1);
    for (std::size_t i = 0; i < high.size(); ++i) rid[high[i]] = static_cast<int>(i);

    Graph red(static_cast<int>(high.size()));
    tr.host_vertex = high;
    auto add = [&](int a, int b, std::vector<int> path) {
        red.add_edge(a, b);
        tr.edge_paths.push_back(std::move(path));
    };
    for (const auto& [a, b] : direct) add(rid[a], rid[b], {a, b});

    for (const Chain& ch : chains) {
        DiamondEvent ev;
        ev.path.push_back(ch.u);
        ev.path.insert(ev.path.end(), ch.inner.begin(), ch.inner.end());
        ev.path.push_back(ch.v);
        const auto& p = ev.path;
        int ru = rid[ch.u], rv = rid[ch.v];
        if (ch.u == ch.v) {
            ev.kind = DiamondCase::Loop;
            int w1 = red.add_vertex(), w2 = red.add_vertex();
            tr.host_vertex.push_back(p[1]);
            tr.host_vertex.push_back(p[2]);
            add(ru, w1, {p[0], p[1]});
            add(w1, w2, {p[1], p[2]});
            add(w2, ru, std::vector<int>(p.begin() + 2, p.end()));
        } else if (red.has_edge(ru, rv)) {
            ev.kind = DiamondCase::ParallelToEdge;
            int w = red.add_vertex();
            tr.host_vertex.push_back(p[1]);
            add(ru, w, {p[0], p[1]});
            add(w, rv, std::vector<int>(p.begin() + 1, p.end()));
        } else {
            ev.kind = DiamondCase::Contract;
            add(ru, rv, p);
        }
        tr.diamonds.push_back(std::move(ev));
    }
    out.reduced = std::move(red);
    return out;
}

Graph replay_trace(const Reduction& r, int host_n) {
    std::set<Edge> es;
    for (const auto& path : r.trace.edge_paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i) es.insert(make_edge(path[i], path[i + 1]));
    for (const auto& [v, a] : r.trace.degree_one) es.insert(make_edge(v, a));
    return Graph(host_n, std::vector<Edge>(es.begin(), es.end()));
}

std::optional<std::string> reduction_bounds_violation(const Reduction& r, int host_fes) {
    if (r.trace.trivial || r.trace.cycle) return std::nullopt;
    const Graph& g = r.reduced;
    int high = 0;
    long degsum = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 2) return "reduced graph has a vertex of degree " + std::to_string(g.degree(v));
        if (g.degree(v) >= 3) {
            ++high;
            degsum += g.degree(v);
        }
    }
    if (high >= 2 * host_fes) return "|V>=3| = " + std::to_string(high) + " is not below 2 fes";
    if (degsum >= 6L * host_fes) return "degree sum " + std::to_string(degsum) + " is not below 6 fes";
    if (g.m() >= 9 * host_fes) return "|E| = " + std::to_string(g.m()) + " is not below 9 fes";
    return std::nullopt;
}

SpanningTree lift_tree(const Reduction& r, const Graph& host, const std::vector<int>& reduced_tree_edges) {
    std::vector<char> in_tree(r.reduced.m(), 0);
    for (int id : reduced_tree_edges) in_tree.at(id) = 1;
    std::vector<Edge> out;
    for (int id = 0; id < r.reduced.m(); ++id) {
        const auto& path = r.trace.edge_paths[id];
        // A non-tree edge still has to cover its subdivision vertices: drop only its first segment.
        for (std::size_t i = in_tree[id] ? 0 : 1; i + 1 < path.size(); ++i)
            out.push_back(make_edge(path[i], path[i + 1]));
    }
    for (auto it = r.trace.degree_one.rbegin(); it != r.trace.degree_one.rend(); ++it)
        out.push_back(make_edge(it->first, it->second));
    return SpanningTree(host, std::move(out));
}

FesResult solve_fes(const Graph& g, const EnumerationBudget& budget, int threads) {
    FesResult res;
    res.reduction = reduce_graph(g);
    const Reduction& red = res.reduction;
    std::vector<int> ids;
    if (red.trace.trivial) {
        // nothing left to choose
    } else if (red.trace.cycle) {
        for (int id = 1; id < red.reduced.m(); ++id) ids.push_back(id);
    } else {
        OracleResult o = stc_exact(red.reduced, budget, threads);
        res.trees_examined = o.trees_examined;
        for (const auto& [a, b] : o.tree.edges()) ids.push_back(red.reduced.edge_id(a, b));
    }
    res.tree = lift_tree(red, g, ids);
    res.k = g.n() == 1 ? 0 : congestion_report(g, res.tree).max_congestion;
    return res;
}

} // namespace stc
