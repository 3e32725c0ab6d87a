#pragma once

#include <cstdint>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

// s x s grid, row-major ids.
Graph grid_graph(int s);
// A spanning tree of the s x s grid with congestion s. Odd s: comb on the middle column;
// s = 2: a path; even s >= 4: seeded local search (throws if it fails to reach s).
std::vector<Edge> grid_optimal_tree(int s, std::uint64_t seed = 1);

enum class GadgetKind { Kept, Paths, Grids };

struct EdgeGadget {
    GadgetKind kind = GadgetKind::Kept;
    int u = -1, v = -1;                   // host endpoints; for grids u meets corner (0,0)
    std::vector<int> middles;             // Paths: the middle vertex of each extra u-w-v path
    int side = 0;                         // Grids: side length
    std::vector<std::vector<int>> grids;  // Grids: vertex ids of each copy, row-major
};

// Host vertices keep their ids; new vertices follow in host edge order.
struct Expansion {
    Graph graph;
    int host_n = 0;
    std::vector<EdgeGadget> gadgets;  // per host edge id
};

// Weight w (= wt1 = wt2) edges keep uv and gain w - 1 paths of length two.
Expansion expand_single_weighted(const DoubleWeightedGraph& g);

// Equal weights as above; wt1 < wt2 < k becomes wt1 copies of the (wt2 - wt1 + 1)-grid between u and v.
// Anything else is a weight-order violation.
Expansion expand_double_weighted(const DoubleWeightedGraph& g, std::int64_t k);

// Pushes a spanning tree of the weighted host through the expansion.
SpanningTree lift_tree(const Expansion& x, const SpanningTree& host_tree);

} // namespace stc
