#include "stc/gadgets.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "stc/congestion.hpp"
#include "stc/errors.hpp"

namespace stc {

Graph grid_graph(int s) {
    if (s < 1) throw InvalidInput("grid side must be positive");
    Graph g(s * s);
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
            if (c + 1 < s) g.add_edge(r * s + c, r * s + c + 1);
            if (r + 1 < s) g.add_edge(r * s + c, (r + 1) * s + c);
        }
    return g;
}

namespace {

std::vector<Edge> comb(int s, int spine) {
    std::vector<Edge> t;
    for (int r = 0; r + 1 < s; ++r) t.push_back(make_edge(r * s + spine, (r + 1) * s + spine));
    for (int r = 0; r < s; ++r)
        for (int c = 0; c + 1 < s; ++c) t.push_back(make_edge(r * s + c, r * s + c + 1));
    return t;
}

// Objective: (max congestion, edges at the max, sum of squares), all to be minimised.
using Score = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

Score score(CongestionEvaluator& ev, const std::vector<int>& ids) {
    const auto& c = ev.evaluate(ids);
    std::int64_t mx = 0, at = 0, sq = 0;
    for (auto v : c) {
        if (v > mx) {
            mx = v;
            at = 0;
        }
        if (v == mx) ++at;
        sq += v * v;
    }
    return {mx, at, sq};
}

std::vector<Edge> local_search(int s, std::uint64_t seed) {
    Graph g = grid_graph(s);
    CongestionEvaluator ev(g);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<int> ids;
        for (auto e : comb(s, s / 2)) ids.push_back(g.edge_id(e.first, e.second));
        Score cur = score(ev, ids);
        for (int it = 0; it < 20000 && std::get<0>(cur) > s; ++it) {
            std::vector<char> in(g.m(), 0);
            for (int id : ids) in[id] = 1;
            std::vector<int> outside;
            for (int id = 0; id < g.m(); ++id)
                if (!in[id]) outside.push_back(id);
            int add = outside[rng() % outside.size()];
            // Tree path between the endpoints of the added edge.
            std::vector<std::vector<std::pair<int, int>>> adj(g.n());
            for (int id : ids) {
                adj[g.edge(id).first].push_back({g.edge(id).second, id});
                adj[g.edge(id).second].push_back({g.edge(id).first, id});
            }
            std::vector<int> via(g.n(), -2), stack{g.edge(add).first};
            via[g.edge(add).first] = -1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [y, id] : adj[x])
                    if (via[y] == -2) {
                        via[y] = id;
                        stack.push_back(y);
                    }
            }
            std::vector<int> cycle;
            for (int x = g.edge(add).second; via[x] >= 0;) {
                int id = via[x];
                cycle.push_back(id);
                x = g.edge(id).first == x ? g.edge(id).second : g.edge(id).first;
            }
            int drop = cycle[rng() % cycle.size()];
            std::vector<int> next = ids;
            *std::find(next.begin(), next.end(), drop) = add;
            Score sc = score(ev, next);
            if (sc <= cur) {
                ids = std::move(next);
                cur = sc;
            }
        }
        if (std::get<0>(cur) == s) {
            std::vector<Edge> t;
            for (int id : ids) t.push_back(g.edge(id));
            return t;
        }
        rng.seed(seed + attempt + 1);
    }
    throw std::runtime_error("local search did not reach the optimal grid congestion");
}

} // namespace

std::vector<Edge> grid_optimal_tree(int s, std::uint64_t seed) {
    if (s < 2) throw InvalidInput("grid side must be at least 2");
    if (s % 2 == 1) return comb(s, s / 2);
    if (s == 2) return {{0, 1}, {1, 3}, {2, 3}};
    return local_search(s, seed);
}

namespace {

void add_paths(Graph& out, EdgeGadget& gd, std::int64_t w) {
    gd.kind = w == 1 ? GadgetKind::Kept : GadgetKind::Paths;
    out.add_edge(gd.u, gd.v);
    for (std::int64_t i = 1; i < w; ++i) {
        int m = out.add_vertex();
        out.add_edge(gd.u, m);
        out.add_edge(m, gd.v);
        gd.middles.push_back(m);
    }
}

void add_grids(Graph& out, EdgeGadget& gd, std::int64_t a, std::int64_t b) {
    gd.kind = GadgetKind::Grids;
    gd.side = static_cast<int>(b - a + 1);
    const int s = gd.side;
    for (std::int64_t copy = 0; copy < a; ++copy) {
        std::vector<int> ids(s * s);
        for (auto& id : ids) id = out.add_vertex();
        for (int r = 0; r < s; ++r)
            for (int c = 0; c < s; ++c) {
                if (c + 1 < s) out.add_edge(ids[r * s + c], ids[r * s + c + 1]);
                if (r + 1 < s) out.add_edge(ids[r * s + c], ids[(r + 1) * s + c]);
            }
        out.add_edge(gd.u, ids.front());
        out.add_edge(gd.v, ids.back());
        gd.grids.push_back(std::move(ids));
    }
}

} // namespace

Expansion expand_single_weighted(const DoubleWeightedGraph& g) {
    if (!g.single_weighted()) throw InvalidInput("single-weight expansion needs wt1 == wt2 on every edge");
    Expansion x;
    x.host_n = g.graph.n();
    x.graph = Graph(g.graph.n());
    for (int id = 0; id < g.graph.m(); ++id) {
        EdgeGadget gd;
        std::tie(gd.u, gd.v) = g.graph.edge(id);
        add_paths(x.graph, gd, g.wt1[id]);
        x.gadgets.push_back(std::move(gd));
    }
    return x;
}

Expansion expand_double_weighted(const DoubleWeightedGraph& g, std::int64_t k) {
    Expansion x;
    x.host_n = g.graph.n();
    x.graph = Graph(g.graph.n());
    for (int id = 0; id < g.graph.m(); ++id) {
        EdgeGadget gd;
        std::tie(gd.u, gd.v) = g.graph.edge(id);
        auto a = g.wt1[id], b = g.wt2[id];
        if (a == b) {
            add_paths(x.graph, gd, a);
        } else if (a < b && b < k) {
            add_grids(x.graph, gd, a, b);
        } else {
            throw InvalidInput("weight-order violation on edge " + std::to_string(gd.u + 1) + "-" +
                               std::to_string(gd.v + 1) + ": need wt1 < wt2 < k or wt1 == wt2");
        }
        x.gadgets.push_back(std::move(gd));
    }
    return x;
}

SpanningTree lift_tree(const Expansion& x, const SpanningTree& host_tree) {
    if (host_tree.n() != x.host_n) throw InvalidInput("tree does not belong to the expansion host");
    std::vector<Edge> out;
    for (const auto& gd : x.gadgets) {
        bool in = host_tree.contains(gd.u, gd.v);
        switch (gd.kind) {
        case GadgetKind::Kept:
            if (in) out.push_back(make_edge(gd.u, gd.v));
            break;
        case GadgetKind::Paths:
            if (in) out.push_back(make_edge(gd.u, gd.v));
            for (int m : gd.middles) out.push_back(make_edge(gd.u, m));
            break;
        case GadgetKind::Grids: {
            auto local = grid_optimal_tree(gd.side);
            for (const auto& ids : gd.grids) {
                for (auto [p, q] : local) out.push_back(make_edge(ids[p], ids[q]));
                out.push_back(make_edge(gd.u, ids.front()));
            }
            if (in) out.push_back(make_edge(gd.v, gd.grids.front().back()));
            break;
        }
        }
    }
    return SpanningTree(x.graph, std::move(out));
}

} // namespace stc
