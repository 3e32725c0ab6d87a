#include <numeric>
#include <queue>

#include "doctest.h"
#include "stc/congestion.hpp"
#include "stc/errors.hpp"
#include "stc/gadgets.hpp"
#include "stc/generators.hpp"
#include "stc/oracle.hpp"
#include "test_support.hpp"

using namespace stc;
using namespace stc::testing;

namespace {

// Length of the tree path between u and v, by BFS over the tree.
int tree_distance(const SpanningTree& t, int u, int v) {
    std::vector<std::vector<int>> adj(t.n());
    for (auto [a, b] : t.edges()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> d(t.n(), -1);
    std::queue<int> q;
    q.push(u);
    d[u] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (d[y] < 0) {
                d[y] = d[x] + 1;
                q.push(y);
            }
    }
    return d[v];
}

SpanningTree random_tree_of(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> order(g.m());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> uf(g.n());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    };
    std::vector<Edge> e;
    for (int id : order) {
        auto [a, b] = g.edge(id);
        if (find(a) != find(b)) {
            uf[find(a)] = find(b);
            e.push_back({a, b});
        }
    }
    return SpanningTree(g, e);
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("graph rejects loops, duplicates and bad ids") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), InvalidInput);
    CHECK_THROWS_AS(g.add_edge(1, 0), InvalidInput);
    CHECK_THROWS_AS(g.add_edge(0, 3), InvalidInput);
    CHECK(g.has_edge(1, 0));
    CHECK(g.edge_id(2, 0) == -1);
}

TEST_CASE("adjacency is symmetric") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_connected(10, 20, rng);
        for (int u = 0; u < g.n(); ++u)
            for (int v : g.neighbors(u)) {
                const auto& nv = g.neighbors(v);
                CHECK(std::find(nv.begin(), nv.end(), u) != nv.end());
            }
    }
}

TEST_CASE("spanning tree validation") {
    Graph c4 = cycle(4);
    CHECK_THROWS_AS(SpanningTree(c4, {{0, 1}, {1, 2}}), InvalidInput);
    CHECK_THROWS_AS(SpanningTree(c4, {{0, 1}, {1, 2}, {0, 2}}), InvalidInput);
    CHECK_THROWS_AS(SpanningTree(c4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), InvalidInput);
    CHECK_NOTHROW(SpanningTree(c4, {{0, 1}, {1, 2}, {2, 3}}));
}

TEST_CASE("star congestion is one everywhere") {
    Graph s = star(3);
    auto rep = congestion_report(s, SpanningTree(s, s.edges()));
    CHECK(rep.max_congestion == 1);
    for (auto c : rep.per_edge) CHECK(c == 1);
}

TEST_CASE("cycle path tree has congestion two on every edge") {
    Graph c4 = cycle(4);
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<Edge> e;
        for (int id = 0; id < 4; ++id)
            if (id != skip) e.push_back(c4.edge(id));
        auto rep = congestion_report(c4, SpanningTree(c4, e));
        for (auto c : rep.per_edge) CHECK(c == 2);
    }
}

TEST_CASE("3x3 grid optimum is 3") {
    Graph g = grid_graph(3);
    auto o = stc_exact(g);
    CHECK(o.k == 3);
    CHECK(congestion_report(g, o.tree).max_congestion == 3);
}

TEST_CASE("cut formula equals detour counting") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_connected(n, n - 1 + static_cast<int>(rng() % 10), rng);
        SpanningTree t = random_tree_of(g, rng);
        auto a = congestion_report(g, t), b = congestion_report_detour(g, t);
        CHECK(a.per_edge == b.per_edge);
        CHECK(a.max_congestion == b.max_congestion);
        for (auto c : a.per_edge) {
            CHECK(c >= 1);
            CHECK(c <= g.m());
        }
        DoubleWeightedGraph w(g);
        for (int id = 0; id < g.m(); ++id) {
            w.wt1[id] = 1 + static_cast<std::int64_t>(rng() % 4);
            w.wt2[id] = 1 + static_cast<std::int64_t>(rng() % 4);
        }
        CHECK(congestion_report(w, t).per_edge == congestion_report_detour(w, t).per_edge);
    }
}

TEST_CASE("sum of congestions equals sum of detour lengths") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 50; ++it) {
        Graph g = random_connected(9, 16, rng);
        SpanningTree t = random_tree_of(g, rng);
        auto rep = congestion_report(g, t);
        std::int64_t lhs = std::accumulate(rep.per_edge.begin(), rep.per_edge.end(), std::int64_t{0});
        std::int64_t rhs = 0;
        for (auto [u, v] : g.edges()) rhs += tree_distance(t, u, v);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("leaf edge congestion equals the leaf degree") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 50; ++it) {
        Graph g = random_connected(8, 14, rng);
        SpanningTree t = random_tree_of(g, rng);
        auto rep = congestion_report(g, t);
        std::vector<int> tdeg(g.n(), 0);
        for (auto [a, b] : t.edges()) ++tdeg[a], ++tdeg[b];
        for (std::size_t i = 0; i < rep.edges.size(); ++i) {
            auto [a, b] = rep.edges[i];
            if (tdeg[a] == 1) CHECK(rep.per_edge[i] == g.degree(a));
            if (tdeg[b] == 1) CHECK(rep.per_edge[i] == g.degree(b));
        }
    }
}

TEST_CASE("double-weight rule on a triangle") {
    DoubleWeightedGraph w(Graph(3));
    w.add_edge(0, 1, 2, 5);
    w.add_edge(1, 2, 1, 1);
    w.add_edge(0, 2, 3, 4);
    SpanningTree t(w.graph, {{0, 1}, {1, 2}});
    auto rep = congestion_report(w, t);
    CHECK(rep.at(0, 1) == 5 + 3);
    CHECK(rep.at(1, 2) == 1 + 3);
}

TEST_CASE("twin classes") {
    auto k5 = twin_classes(complete(5), {}, TwinMode::Closed);
    REQUIRE(k5.size() == 1);
    CHECK(k5[0].size() == 5);
    CHECK(twin_classes(complete(5), {}, TwinMode::Open).size() == 5);

    Graph g = complete(4);
    int s = g.add_vertex();
    g.add_edge(0, s);
    g.add_edge(2, s);
    auto cl = twin_classes(g, {s});
    REQUIRE(cl.size() == 2);
    CHECK(cl[0] == std::vector<int>{0, 2});
    CHECK(cl[1] == std::vector<int>{1, 3});
}

TEST_CASE("twin classes on the bin packing graph group every item vertex") {
    auto b = gen_ubp(3, {1, 2, 1, 2}, UbpFamily::Cliques);
    std::vector<int> s = b.groups.at("Q");
    s.push_back(b.groups.at("r").front());
    auto cl = twin_classes(b.graph, s);
    const auto& items = b.groups.at("V_2");
    bool together = std::any_of(cl.begin(), cl.end(), [&](const std::vector<int>& c) {
        return std::all_of(items.begin(), items.end(), [&](int v) { return std::find(c.begin(), c.end(), v) != c.end(); });
    });
    CHECK(together);
}

TEST_CASE("twin classes refine when the set grows") {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_connected(10, 18, rng);
        std::vector<int> s{0, 3}, s2{0, 3, 5, 7};
        auto coarse = twin_classes(g, s), fine = twin_classes(g, s2);
        std::vector<int> cls(g.n(), -1);
        for (std::size_t i = 0; i < coarse.size(); ++i)
            for (int v : coarse[i]) cls[v] = static_cast<int>(i);
        for (const auto& c : fine)
            for (int v : c) CHECK(cls[v] == cls[c.front()]);
    }
}

TEST_CASE("biclique search") {
    auto k33 = find_biclique(complete_bipartite(3, 3), 3);
    REQUIRE(k33);
    CHECK(k33->first.size() == 3);
    CHECK_FALSE(find_biclique(path(5), 2));
    Graph k5 = complete(5);
    auto bc = find_biclique(k5, 2);
    REQUIRE(bc);
    for (int a : bc->first)
        for (int b : bc->second) CHECK(k5.has_edge(a, b));
    CHECK_FALSE(find_biclique(k5, 3));
    CHECK_THROWS_AS(find_biclique(k5, 0), InvalidInput);
}

TEST_CASE("biclique lower bounds") {
    CHECK(stc_lower_bound_biclique(complete_bipartite(4, 4), 4) == 4);
    CHECK_FALSE(stc_lower_bound_biclique(path(6), 2));
    CHECK(stc_lower_bound_biclique(complete(5), 2) == 2);
    CHECK(stc_exact(complete(5)).k == 4);
}

TEST_CASE("induced subgraph and subdivision") {
    Graph g = cycle(5);
    Graph h = induced_subgraph(g, {0, 1, 2});
    CHECK(h.m() == 2);
    Graph s = subdivide_edge(g, 0);
    CHECK(s.n() == 6);
    CHECK(s.m() == 6);
    CHECK(s.degree(5) == 2);
    CHECK_FALSE(s.has_edge(g.edge(0).first, g.edge(0).second));
}

TEST_CASE("feedback edge number and components") {
    CHECK(feedback_edge_number(complete(4)) == 3);
    Graph g(5, {{0, 1}, {2, 3}});
    auto comps = components(g, std::vector<bool>(5, false));
    CHECK(comps.size() == 3);
    CHECK_FALSE(is_connected(g));
}

}
