#include "doctest.h"
#include "stc/congestion.hpp"
#include "stc/decomposition.hpp"
#include "stc/errors.hpp"
#include "stc/gadgets.hpp"
#include "stc/oracle.hpp"
#include "stc/skeleton.hpp"
#include "stc/tw_dp.hpp"
#include "stc/winwin.hpp"
#include "test_support.hpp"

using namespace stc;
using namespace stc::testing;

namespace {

int alive_links(const QuasiSkeleton& s) {
    int c = 0;
    for (const auto& l : s.links) c += l.alive;
    return c;
}

} // namespace

TEST_SUITE("dp") {

TEST_CASE("simplify contracts anonymous degree-2 nodes") {
    QuasiSkeleton s;
    int a = s.add_node(0, 0), x = s.add_node(-1, 1), b = s.add_node(1, 0);
    s.add_link(a, x, 1, 2);
    s.add_link(x, b, 1, 5);
    simplify(s);
    CHECK(s.alive_nodes() == 2);
    REQUIRE(alive_links(s) == 1);
    for (const auto& l : s.links)
        if (l.alive) {
            CHECK(l.c == 5);
            CHECK(l.label == 1);
        }
}

TEST_CASE("simplify drops anonymous leaves repeatedly") {
    QuasiSkeleton s;
    int a = s.add_node(0, 0), x = s.add_node(-1, -1, 0), y = s.add_node(-1, -1, 0);
    s.add_link(a, x, -1, 1);
    s.add_link(x, y, -1, 1);
    simplify(s);
    CHECK(s.alive_nodes() == 1);
    CHECK(alive_links(s) == 0);
}

TEST_CASE("simplify keeps anonymous branch nodes and is idempotent") {
    QuasiSkeleton s;
    int hub = s.add_node(-1, 1);
    for (int v = 0; v < 3; ++v) s.add_link(hub, s.add_node(v, 0), 1, static_cast<std::uint32_t>(v + 1));
    simplify(s);
    CHECK(s.alive_nodes() == 4);
    CHECK(alive_links(s) == 3);
    auto before = s.alive_nodes();
    simplify(s);
    CHECK(s.alive_nodes() == before);
}

TEST_CASE("exact DP on small families") {
    CHECK(solve_exact_tw(cycle(6), 2));
    CHECK_FALSE(solve_exact_tw(cycle(6), 1));
    CHECK_FALSE(solve_exact_tw(grid_graph(3), 2));
    auto g3 = solve_exact_tw(grid_graph(3), 3);
    REQUIRE(g3);
    CHECK(congestion_report(grid_graph(3), *g3).max_congestion <= 3);
    CHECK(solve_exact_tw(complete(4), 3));
    CHECK_FALSE(solve_exact_tw(complete(4), 2));
    CHECK(solve_stc_tw(path(5)).k == 1);
    CHECK(solve_stc_tw(Graph(1)).k == 0);
}

TEST_CASE("leaf table holds only the empty state") {
    Graph g = cycle(5);
    auto ntd = nice_decomposition(g);
    DPOptions opt;
    opt.keep_tables = true;
    auto run = run_exact_dp(g, 2, ntd, opt);
    CHECK(run.tree);
    REQUIRE(run.tables.size() == ntd.nodes.size());
    for (std::size_t i = 0; i < ntd.nodes.size(); ++i)
        if (ntd.nodes[i].kind == NodeKind::Leaf) {
            REQUIRE(run.tables[i].size() == 1);
            CHECK(run.tables[i][0].shape == std::vector<std::uint16_t>{0, 0});
            CHECK(run.tables[i][0].c.empty());
        }
    CHECK(run.stats.max_skeleton <= 2 * static_cast<std::size_t>(ntd.width() + 1) + 1);
}

TEST_CASE("DP optimum equals the oracle on random graphs") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 60; ++it) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = random_connected(n, n - 1 + static_cast<int>(rng() % 7), rng);
        auto dp = solve_stc_tw(g);
        auto o = stc_exact(g);
        CHECK(dp.k == o.k);
        CHECK(congestion_report(g, dp.tree).max_congestion == dp.k);
    }
}

TEST_CASE("every stored entry passes the consistency validator") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 25; ++it) {
        Graph g = random_connected(8, 12, rng);
        auto ntd = nice_decomposition(g);
        auto k = stc_exact(g).k;
        DPOptions opt;
        opt.validate = true;
        DPRun run;
        CHECK_NOTHROW(run = run_exact_dp(g, k, ntd, opt));
        CHECK(run.tree);
        CHECK_NOTHROW(run_exact_dp(g, k - 1, ntd, opt));
    }
}

TEST_CASE("DP rejects a decomposition of another graph") {
    auto ntd = nice_decomposition(path(4));
    CHECK_THROWS_AS(solve_exact_tw(cycle(4), 2, ntd), InvalidInput);
}

TEST_CASE("rounded DP stays within the factor") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 25; ++it) {
        Graph g = random_connected(8, 13, rng);
        auto opt = stc_exact(g).k;
        for (auto eps : {Rational{1, 2}, Rational{1, 1}}) {
            auto a = solve_approx_tw(g, eps);
            CHECK(a.congestion == congestion_report(g, a.tree).max_congestion);
            CHECK(a.congestion * eps.den <= (eps.den + eps.num) * opt);
            CHECK(a.k_tried <= opt);
        }
    }
}

TEST_CASE("rounded and exact tables match node by node") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 10; ++it) {
        Graph g = random_connected(7, 11, rng);
        auto ntd = nice_decomposition(g);
        auto k = stc_exact(g).k;
        auto audit = audit_approx_invariants(g, Rational{1, 2}, k, ntd);
        CHECK_MESSAGE(audit.ok, audit.message);
        CHECK(audit.exact_states > 0);
    }
}

TEST_CASE("win/win decision") {
    auto yes = solve_cw_winwin(cycle(6), 2, 3);
    CHECK(yes.answer == WinWinAnswer::Yes);
    REQUIRE(yes.tree);
    CHECK(congestion_report(cycle(6), *yes.tree).max_congestion <= 2);
    CHECK(solve_cw_winwin(grid_graph(3), 2, 3).answer == WinWinAnswer::No);

    Graph big = complete_bipartite(15, 15);
    auto no = solve_cw_winwin(big, 1, 1);
    CHECK(no.answer == WinWinAnswer::NoByBiclique);
    CHECK_FALSE(no.used_dp);
    REQUIRE(no.biclique);
    CHECK(no.biclique->first.size() == 2);
    CHECK_THROWS_AS(solve_cw_winwin(cycle(4), 0, 2), InvalidInput);
}

}
