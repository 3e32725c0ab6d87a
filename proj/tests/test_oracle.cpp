#include <set>

#include "doctest.h"
#include "stc/congestion.hpp"
#include "stc/errors.hpp"
#include "stc/gadgets.hpp"
#include "stc/oracle.hpp"
#include "test_support.hpp"

using namespace stc;
using namespace stc::testing;

TEST_SUITE("oracle") {

TEST_CASE("tree counts on small graphs") {
    EnumerationBudget b;
    CHECK(all_spanning_trees(cycle(4), b).size() == 4);
    CHECK(all_spanning_trees(complete(4), b).size() == 16);
    CHECK(all_spanning_trees(grid_graph(2), b).size() == 4);
    CHECK(all_spanning_trees(complete(5), b).size() == 125);
    CHECK(all_spanning_trees(path(6), b).size() == 1);
    CHECK(kirchhoff_tree_count(grid_graph(3)) == 192);
}

TEST_CASE("enumeration count matches Kirchhoff and trees are distinct") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_connected(n, n - 1 + static_cast<int>(rng() % 8), rng);
        std::set<std::vector<int>> seen;
        std::uint64_t count = enumerate_spanning_trees(g, {}, [&](const std::vector<int>& ids) {
            std::vector<int> s = ids;
            std::sort(s.begin(), s.end());
            seen.insert(s);
            std::vector<Edge> e;
            for (int id : ids) e.push_back(g.edge(id));
            CHECK_FALSE(spanning_tree_violation(g, e));
            return true;
        });
        CHECK(count == seen.size());
        CHECK(boost::multiprecision::cpp_int(count) == kirchhoff_tree_count(g));
    }
}

TEST_CASE("visitor can stop early") {
    int calls = 0;
    enumerate_spanning_trees(complete(5), {}, [&](const std::vector<int>&) { return ++calls < 3; });
    CHECK(calls == 3);
}

TEST_CASE("optimal congestion of small families") {
    CHECK(stc_exact(path(7)).k == 1);
    CHECK(stc_exact(star(4)).k == 1);
    CHECK(stc_exact(cycle(6)).k == 2);
    CHECK(stc_exact(complete(4)).k == 3);
    CHECK(stc_exact(grid_graph(3)).k == 3);
    CHECK(stc_exact(complete_bipartite(2, 3)).k == 3);
}

TEST_CASE("reported tree achieves reported congestion") {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_connected(8, 8 + static_cast<int>(rng() % 8), rng);
        auto o = stc_exact(g);
        CHECK(o.trees_examined >= 1);
        CHECK(congestion_report(g, o.tree).max_congestion == o.k);
    }
}

TEST_CASE("parallel search returns the serial answer") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_connected(9, 14, rng);
        auto a = stc_exact(g, {}, 1), b = stc_exact(g, {}, 4);
        CHECK(a.k == b.k);
        CHECK(a.tree.edges() == b.tree.edges());
    }
}

TEST_CASE("biclique bound never exceeds the optimum") {
    std::mt19937_64 rng(24);
    for (int it = 0; it < 30; ++it) {
        Graph g = random_connected(8, 18, rng);
        auto o = stc_exact(g);
        for (int t = 1; t <= 4; ++t)
            if (auto lb = stc_lower_bound_biclique(g, t)) CHECK(*lb <= o.k);
    }
}

TEST_CASE("subdividing an edge keeps the optimum") {
    std::mt19937_64 rng(25);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_connected(7, 11, rng);
        int id = static_cast<int>(rng() % g.m());
        CHECK(stc_exact(g).k == stc_exact(subdivide_edge(g, id)).k);
    }
}

TEST_CASE("budget and connectivity errors") {
    EnumerationBudget tiny;
    tiny.max_trees = 10;
    CHECK_THROWS_AS(stc_exact(complete(6), tiny), BudgetExceeded);
    CHECK_THROWS_AS(stc_exact(complete(6), tiny, 4), BudgetExceeded);
    CHECK_THROWS_AS(stc_exact(Graph(3, {{0, 1}})), Disconnected);
}

TEST_CASE("weighted triangle") {
    DoubleWeightedGraph w(Graph(3));
    w.add_edge(0, 1, 2, 5);
    w.add_edge(1, 2, 1, 1);
    w.add_edge(0, 2, 3, 4);
    auto o = stc_exact(w);
    CHECK(o.k == 6);
    CHECK(stc_at_most(w, 6));
    CHECK_FALSE(stc_at_most(w, 5));
}

TEST_CASE("decision version agrees with the optimum") {
    std::mt19937_64 rng(26);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_connected(7, 12, rng);
        auto k = stc_exact(g).k;
        DoubleWeightedGraph w(g);
        auto t = stc_at_most(w, k);
        REQUIRE(t);
        CHECK(congestion_report(g, *t).max_congestion <= k);
        CHECK_FALSE(stc_at_most(w, k - 1));
    }
}

}
