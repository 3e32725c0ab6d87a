#include <set>

#include "doctest.h"
#include "stc/congestion.hpp"
#include "stc/fes.hpp"
#include "stc/oracle.hpp"
#include "test_support.hpp"

using namespace stc;
using namespace stc::testing;

namespace {

std::set<Edge> edge_set(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

// u = 0 and v = 1 joined by `paths` internally disjoint paths with `inner` internal vertices each.
Graph theta(int paths, int inner) {
    Graph g(2);
    for (int p = 0; p < paths; ++p) {
        int prev = 0;
        for (int i = 0; i < inner; ++i) {
            int x = g.add_vertex();
            g.add_edge(prev, x);
            prev = x;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

} // namespace

TEST_SUITE("fes") {

TEST_CASE("trees are flagged trivial") {
    Graph t = path(6);
    auto r = reduce_graph(t);
    CHECK(r.trace.trivial);
    CHECK(r.trace.degree_one.size() == 5);
    auto res = solve_fes(t);
    CHECK(res.k == 1);
    CHECK(res.tree.edges().size() == 5);
}

TEST_CASE("unicyclic graphs are flagged as cycles") {
    Graph g = cycle(5);
    int a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(2, a);
    g.add_edge(a, b);
    auto r = reduce_graph(g);
    CHECK(r.trace.cycle);
    CHECK_FALSE(r.trace.trivial);
    CHECK(r.trace.degree_one.size() == 2);
    CHECK(r.trace.degree_one[0] == std::pair{b, a});
    CHECK(r.reduced.n() == 5);
    auto res = solve_fes(g);
    CHECK(res.k == 2);
    CHECK(congestion_report(g, res.tree).max_congestion == 2);
}

TEST_CASE("theta graph reduces to four vertices") {
    Graph g = theta(3, 2);
    CHECK(feedback_edge_number(g) == 2);
    auto r = reduce_graph(g);
    CHECK(r.reduced.n() == 4);
    CHECK(r.reduced.m() == 5);
    REQUIRE(r.trace.diamonds.size() == 3);
    CHECK(r.trace.diamonds[0].kind == DiamondCase::Contract);
    CHECK(r.trace.diamonds[1].kind == DiamondCase::ParallelToEdge);
    CHECK(r.trace.diamonds[2].kind == DiamondCase::ParallelToEdge);
    CHECK(r.trace.host_vertex[0] == 0);
    CHECK(r.trace.host_vertex[1] == 1);
    CHECK(edge_set(replay_trace(r, g.n())) == edge_set(g));
    CHECK_FALSE(reduction_bounds_violation(r, 2));
    auto res = solve_fes(g);
    CHECK(res.k == stc_exact(g).k);
}

TEST_CASE("a chain closing on one vertex becomes a loop gadget") {
    // K_4 with a pendant 3-cycle hanging off vertex 0.
    Graph g = complete(4);
    int a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(0, a);
    g.add_edge(a, b);
    g.add_edge(b, 0);
    auto r = reduce_graph(g);
    bool loop = false;
    for (const auto& d : r.trace.diamonds) loop |= d.kind == DiamondCase::Loop;
    CHECK(loop);
    CHECK(edge_set(replay_trace(r, g.n())) == edge_set(g));
    CHECK(solve_fes(g).k == stc_exact(g).k);
}

TEST_CASE("the reduction keeps the feedback edge number") {
    Graph g = complete(4);
    auto r = reduce_graph(g);
    CHECK(feedback_edge_number(r.reduced) == 3);
    CHECK(r.trace.diamonds.empty());
    CHECK(r.reduced.n() == 4);
}

TEST_CASE("random graphs: replay, bounds and oracle agreement") {
    std::mt19937_64 rng(51);
    int checked = 0;
    for (int it = 0; it < 120; ++it) {
        int n = 6 + static_cast<int>(rng() % 20);
        int f = 2 + static_cast<int>(rng() % 4);
        Graph g = random_with_fes(n, f, rng);
        auto r = reduce_graph(g);
        CHECK(edge_set(replay_trace(r, g.n())) == edge_set(g));
        if (!r.trace.cycle && !r.trace.trivial) {
            auto bad = reduction_bounds_violation(r, f);
            CHECK_MESSAGE(!bad, *bad);
            CHECK(feedback_edge_number(r.reduced) == f);
        }
        auto res = solve_fes(g);
        CHECK(congestion_report(g, res.tree).max_congestion == res.k);
        if (kirchhoff_tree_count(g) <= 200000) {
            CHECK(res.k == stc_exact(g).k);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("lifting a reduced tree never lowers its congestion") {
    std::mt19937_64 rng(52);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_with_fes(14, 3, rng);
        auto r = reduce_graph(g);
        if (r.trace.cycle || r.trace.trivial) continue;
        EnumerationBudget b;
        enumerate_spanning_trees(r.reduced, b, [&](const std::vector<int>& ids) {
            std::vector<Edge> e;
            for (int id : ids) e.push_back(r.reduced.edge(id));
            auto reduced_k = congestion_report(r.reduced, SpanningTree(r.reduced, e)).max_congestion;
            auto lifted = lift_tree(r, g, ids);
            CHECK(congestion_report(g, lifted).max_congestion >= reduced_k);
            return true;
        });
    }
}

}
