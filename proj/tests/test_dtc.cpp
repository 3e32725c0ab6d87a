#include "doctest.h"
#include "stc/congestion.hpp"
#include "stc/dtc.hpp"
#include "stc/errors.hpp"
#include "stc/oracle.hpp"
#include "test_support.hpp"

using namespace stc;
using namespace stc::testing;

namespace {

// K_N on ids 0..N-1 plus q modulator vertices N..N+q-1 with random adjacency; connected.
Graph clique_plus(int N, int q, double p, std::mt19937_64& rng, std::vector<int>& s) {
    Graph g = complete(N);
    s.clear();
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < q; ++i) {
        int x = g.add_vertex();
        s.push_back(x);
        for (int c = 0; c < N; ++c)
            if (coin(rng)) g.add_edge(c, x);
        for (int j = 0; j < i; ++j)
            if (coin(rng)) g.add_edge(s[j], x);
        if (g.degree(x) == 0) g.add_edge(static_cast<int>(rng() % N), x);
    }
    return g;
}

} // namespace

TEST_SUITE("dtc") {

TEST_CASE("thresholds") {
    CHECK(dtc_is_small(6, 1));
    CHECK_FALSE(dtc_is_small(7, 1));
    CHECK(dtc_is_small(24, 2));
    CHECK_FALSE(dtc_is_small(25, 2));
    CHECK_FALSE(dtc_is_small(1, 0));
    CHECK(dtc_bound_satisfied(157, 100, 2));
    CHECK_FALSE(dtc_bound_satisfied(158, 100, 2));
    CHECK(dtc_bound_satisfied(5, 6, 0));
    CHECK_FALSE(dtc_bound_satisfied(6, 6, 0));
}

TEST_CASE("complete graph without modulator uses the enumeration") {
    auto r = solve_dtc(complete(6), {});
    CHECK_FALSE(r.small_case);
    CHECK(r.k == 5);
    CHECK(r.candidates > 0);
    CHECK(congestion_report(complete(6), r.tree).max_congestion == 5);
}

TEST_CASE("one modulator vertex above the small threshold matches the oracle") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 12; ++it) {
        std::vector<int> s;
        int N = 7 + it % 2;
        Graph g = clique_plus(N, 1, 0.5, rng, s);
        auto r = solve_dtc(g, s);
        CHECK_FALSE(r.small_case);
        CHECK(r.k == stc_exact(g, {}, 4).k);
        CHECK(congestion_report(g, r.tree).max_congestion == r.k);
    }
}

TEST_CASE("small instances go to the oracle") {
    std::mt19937_64 rng(62);
    std::vector<int> s;
    Graph g = clique_plus(5, 2, 0.5, rng, s);
    auto r = solve_dtc(g, s);
    CHECK(r.small_case);
    CHECK(r.k == stc_exact(g).k);
}

TEST_CASE("forced enumeration never beats the optimum") {
    std::mt19937_64 rng(63);
    for (int it = 0; it < 15; ++it) {
        std::vector<int> s;
        Graph g = clique_plus(4 + it % 3, 1 + it % 2, 0.5, rng, s);
        DtcOptions opt;
        opt.force_enumeration = true;
        auto r = solve_dtc(g, s, opt);
        CHECK_FALSE(r.small_case);
        CHECK(r.k >= stc_exact(g).k);
        CHECK(congestion_report(g, r.tree).max_congestion == r.k);
    }
}

TEST_CASE("parallel enumeration returns the serial tree") {
    std::mt19937_64 rng(64);
    std::vector<int> s;
    Graph g = clique_plus(9, 1, 0.4, rng, s);
    DtcOptions par;
    par.threads = 4;
    auto a = solve_dtc(g, s), b = solve_dtc(g, s, par);
    CHECK(a.k == b.k);
    CHECK(a.tree.edges() == b.tree.edges());
}

TEST_CASE("bound tree on a large clique") {
    std::mt19937_64 rng(65);
    for (double p : {0.1, 0.5, 0.9}) {
        std::vector<int> s;
        Graph g = clique_plus(100, 2, p, rng, s);
        auto t = dtc_bound_tree(g, s);
        auto k = congestion_report(g, t).max_congestion;
        CHECK(dtc_bound_satisfied(k, 100, 2));
        CHECK(k <= 157);
    }
}

TEST_CASE("invalid modulators are rejected") {
    Graph c5 = cycle(5);
    CHECK_THROWS_AS(solve_dtc(c5, {0}), InvalidInput);
    CHECK_THROWS_AS(solve_dtc(complete(4), {0, 1, 2, 3}), InvalidInput);
}

TEST_CASE("clique modulator search") {
    auto none = find_clique_modulator(complete(5), 2);
    REQUIRE(none);
    CHECK(none->empty());
    Graph g = complete(5);
    int x = g.add_vertex();
    g.add_edge(0, x);
    auto one = find_clique_modulator(g, 2);
    REQUIRE(one);
    CHECK(*one == std::vector<int>{x});
    CHECK_FALSE(find_clique_modulator(g, 0));
    auto c5 = find_clique_modulator(cycle(5), 3);
    REQUIRE(c5);
    CHECK(c5->size() == 3);
}

}
