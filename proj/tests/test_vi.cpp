#include <numeric>

#include "doctest.h"
#include "stc/congestion.hpp"
#include "stc/errors.hpp"
#include "stc/ilp.hpp"
#include "stc/oracle.hpp"
#include "stc/vi.hpp"
#include "test_support.hpp"

using namespace stc;
using namespace stc::testing;

namespace {

// Number of components C of G - S such that some piece of T[C] has two or more tree edges into S.
int non_leaf_components(const Graph& g, const std::vector<int>& s, const std::vector<Edge>& tree) {
    std::vector<bool> in_s(g.n(), false);
    for (int v : s) in_s[v] = true;
    std::vector<int> uf(g.n());
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    };
    for (auto [a, b] : tree)
        if (!in_s[a] && !in_s[b]) uf[find(a)] = find(b);
    std::vector<int> s_edges(g.n(), 0);
    for (auto [a, b] : tree) {
        if (in_s[a] && !in_s[b]) ++s_edges[find(b)];
        if (in_s[b] && !in_s[a]) ++s_edges[find(a)];
    }
    auto comps = components(g, in_s);
    int bad = 0;
    for (const auto& c : comps) {
        bool non_leaf = false;
        for (int v : c)
            if (find(v) == v && s_edges[v] >= 2) non_leaf = true;
        bad += non_leaf;
    }
    return bad;
}

} // namespace

TEST_SUITE("vi") {

TEST_CASE("component types") {
    Graph k12 = star(2);
    auto cat = enumerate_types(k12, {0});
    REQUIRE(cat.classes.size() == 1);
    CHECK(cat.classes[0].members.size() == 2);
    REQUIRE(cat.patterns[0].size() == 1);
    CHECK(cat.patterns[0][0].leaf);

    auto mid = enumerate_types(path(3), {0, 2});
    REQUIRE(mid.types.size() == 1);
    CHECK(mid.types[0].s_mask[0] == 3);
    const auto& pats = mid.patterns[0];
    CHECK(pats.size() == 3);
    CHECK(std::count_if(pats.begin(), pats.end(), [](const ForestPattern& p) { return p.leaf; }) == 2);
}

TEST_CASE("isomorphic components share a type") {
    // s = 0; two triangles hanging off s through one vertex each, and one pendant edge.
    Graph g(8);
    for (int base : {1, 4}) {
        g.add_edge(0, base);
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base, base + 2);
    }
    g.add_edge(0, 7);
    auto cat = enumerate_types(g, {0});
    REQUIRE(cat.classes.size() == 2);
    std::vector<std::size_t> sizes;
    for (const auto& c : cat.classes) sizes.push_back(c.members.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2});
    for (const auto& t : cat.types) CHECK_FALSE(t.automorphisms.empty());
    CHECK_THROWS_AS(enumerate_types(g, {0}, 2), InvalidInput);
}

TEST_CASE("paths and cycles") {
    auto p = solve_vi(path(6), {2});
    CHECK(p.k == 1);
    auto c = solve_vi(cycle(6), {0, 3});
    CHECK(c.k == 2);
    CHECK(congestion_report(cycle(6), c.tree).max_congestion == 2);
    CHECK(solve_vi(complete(4), {}).k == 3);
}

TEST_CASE("random graphs of small vertex integrity match the oracle") {
    std::mt19937_64 rng(71);
    int checked = 0;
    for (int it = 0; it < 80 && checked < 40; ++it) {
        int n = 4 + static_cast<int>(rng() % 6);
        Graph g = random_connected(n, n - 1 + static_cast<int>(rng() % 5), rng);
        auto vi = vertex_integrity_set(g, 4);
        if (!vi || vi->s.empty()) continue;
        ++checked;
        auto r = solve_vi(g, vi->s);
        CHECK(r.k == stc_exact(g).k);
        CHECK(congestion_report(g, r.tree).max_congestion == r.k);
    }
    CHECK(checked >= 20);
}

TEST_CASE("parallel guesses return the serial answer") {
    std::mt19937_64 rng(72);
    for (int it = 0; it < 5; ++it) {
        Graph g = random_connected(9, 12, rng);
        auto vi = vertex_integrity_set(g, 6);
        REQUIRE(vi);
        VIOptions par;
        par.threads = 4;
        auto a = solve_vi(g, vi->s), b = solve_vi(g, vi->s, par);
        CHECK(a.k == b.k);
        CHECK(a.tree.edges() == b.tree.edges());
    }
}

TEST_CASE("min-max ILP") {
    MinMaxIlp forced{{0}, {3}, {1}, {{2}}, {}};
    auto f = ilp_minimize_max(forced);
    REQUIRE(f);
    CHECK(f->objective == 7);
    CHECK(f->x == std::vector<std::int64_t>{3});

    MinMaxIlp split{{0, 0}, {4}, {0, 0}, {{1, 0}, {0, 1}}, {}};
    auto s = ilp_minimize_max(split);
    REQUIRE(s);
    CHECK(s->objective == 2);
    CHECK(s->x == std::vector<std::int64_t>{2, 2});

    MinMaxIlp empty{{0}, {2}, {}, {}, {}};
    auto e = ilp_minimize_max(empty);
    REQUIRE(e);
    CHECK(e->objective == 0);

    MinMaxIlp floors{{0, 0}, {1}, {0}, {{0, 3}}, {5, 0}};
    auto fl = ilp_minimize_max(floors);
    REQUIRE(fl);
    CHECK(fl->objective == 3);
    CHECK(fl->x == std::vector<std::int64_t>{0, 1});

    MinMaxIlp infeasible{{}, {1}, {}, {}, {}};
    CHECK_FALSE(ilp_minimize_max(infeasible));

    MinMaxIlp negative{{0}, {1}, {0}, {{-1}}, {}};
    CHECK_THROWS_AS(ilp_minimize_max(negative), InvalidInput);
}

TEST_CASE("ILP agrees with brute force") {
    std::mt19937_64 rng(73);
    for (int it = 0; it < 100; ++it) {
        MinMaxIlp p;
        p.var_class = {0, 0, 0, 1, 1};
        p.class_total = {static_cast<std::int64_t>(rng() % 4), static_cast<std::int64_t>(rng() % 4)};
        int rows = 1 + static_cast<int>(rng() % 3);
        for (int r = 0; r < rows; ++r) {
            p.a.push_back(static_cast<std::int64_t>(rng() % 5));
            std::vector<std::int64_t> row;
            for (int j = 0; j < 5; ++j) row.push_back(static_cast<std::int64_t>(rng() % 3));
            p.b.push_back(row);
        }
        for (int j = 0; j < 5; ++j) p.floor.push_back(static_cast<std::int64_t>(rng() % 6));
        std::int64_t best = -1;
        for (int x0 = 0; x0 <= 3; ++x0)
            for (int x1 = 0; x0 + x1 <= p.class_total[0]; ++x1) {
                int x2 = static_cast<int>(p.class_total[0]) - x0 - x1;
                if (x0 > p.class_total[0]) continue;
                for (int x3 = 0; x3 <= p.class_total[1]; ++x3) {
                    int x4 = static_cast<int>(p.class_total[1]) - x3;
                    std::vector<std::int64_t> x{x0, x1, x2, x3, x4};
                    std::int64_t val = 0;
                    for (int r = 0; r < rows; ++r) {
                        std::int64_t v = p.a[r];
                        for (int j = 0; j < 5; ++j) v += p.b[r][j] * x[j];
                        val = std::max(val, v);
                    }
                    for (int j = 0; j < 5; ++j)
                        if (x[j] > 0) val = std::max(val, p.floor[j]);
                    if (best < 0 || val < best) best = val;
                }
            }
        auto sol = ilp_minimize_max(p);
        REQUIRE(sol);
        CHECK(sol->objective == best);
    }
}

TEST_CASE("vertex integrity") {
    auto st = vertex_integrity_set(star(5), 4);
    REQUIRE(st);
    CHECK(st->value == 2);
    CHECK(st->s == std::vector<int>{0});
    auto p9 = vertex_integrity_set(path(9), 6);
    REQUIRE(p9);
    CHECK(p9->value == 5);
    CHECK_FALSE(vertex_integrity_set(complete(5), 3));
    auto k5 = vertex_integrity_set(complete(5), 5);
    REQUIRE(k5);
    CHECK(k5->value == 5);
}

TEST_CASE("the signature determines the congestion, whatever the member order") {
    // One hub; three pendant edges whose both ends see the hub, and two pendant vertices.
    Graph g(9);
    for (int base : {1, 3, 5}) {
        g.add_edge(0, base);
        g.add_edge(0, base + 1);
        g.add_edge(base, base + 1);
    }
    g.add_edge(0, 7);
    g.add_edge(0, 8);
    auto r = solve_vi(g, {0});
    auto cat = enumerate_types(g, {0});
    std::vector<std::vector<std::int64_t>> counts;
    std::size_t pos = 0;
    for (const auto& cls : cat.classes) {
        auto w = cat.patterns[cls.type].size();
        REQUIRE(pos + w <= r.signature.size());
        counts.emplace_back(r.signature.begin() + static_cast<long>(pos), r.signature.begin() + static_cast<long>(pos + w));
        pos += w;
    }
    REQUIRE(pos == r.signature.size());
    std::vector<std::vector<int>> fwd, rev;
    for (const auto& cls : cat.classes) {
        std::vector<int> o(cls.members.size());
        std::iota(o.begin(), o.end(), 0);
        fwd.push_back(o);
        std::reverse(o.begin(), o.end());
        rev.push_back(o);
    }
    auto a = tree_from_signature(g, cat, {}, counts, fwd);
    auto b = tree_from_signature(g, cat, {}, counts, rev);
    CHECK(congestion_report(g, a).max_congestion == r.k);
    CHECK(congestion_report(g, b).max_congestion == r.k);
    CHECK(r.k == stc_exact(g).k);
    counts[0][0] += 1;
    CHECK_THROWS_AS(tree_from_signature(g, cat, {}, counts, fwd), InvalidInput);
}

TEST_CASE("at most |S| - 1 components are non-leaf in any spanning tree") {
    std::mt19937_64 rng(74);
    for (int it = 0; it < 15; ++it) {
        Graph g = random_connected(8, 12, rng);
        std::vector<int> s{0, 1, 2};
        enumerate_spanning_trees(g, {}, [&](const std::vector<int>& ids) {
            std::vector<Edge> e;
            for (int id : ids) e.push_back(g.edge(id));
            CHECK(non_leaf_components(g, s, e) <= 2);
            return true;
        });
    }
}

TEST_CASE("precheck finds the same optimum") {
    VIOptions opt;
    opt.precheck = true;
    auto r = solve_vi(cycle(6), {0, 3}, opt);
    CHECK(r.precheck_hit);
    CHECK(r.k == 2);
    auto plain = solve_vi(cycle(6), {0, 3});
    CHECK_FALSE(plain.precheck_hit);
    CHECK(plain.ilp_solves > 0);
}

}
