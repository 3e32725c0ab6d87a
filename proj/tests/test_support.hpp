#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "stc/graph.hpp"

namespace stc::testing {

// Random spanning tree (each vertex attaches to an earlier one) plus extra edges up to m.
inline Graph random_connected(int n, int m, std::mt19937_64& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    const int max_m = n * (n - 1) / 2;
    m = std::min(m, max_m);
    while (g.m() < m) {
        int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

inline Graph random_with_fes(int n, int fes, std::mt19937_64& rng) { return random_connected(n, n - 1 + fes, rng); }

inline Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

} // namespace stc::testing
