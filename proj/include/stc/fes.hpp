#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stc/graph.hpp"
#include "stc/oracle.hpp"

namespace stc {

// Loop: the path closes on one vertex. ParallelToEdge: uv already present. Contract: otherwise.
enum class DiamondCase { Loop, ParallelToEdge, Contract };

struct DiamondEvent {
    DiamondCase kind = DiamondCase::Contract;
    // Host path u, p1, ..., pm, v (u == v for loops).
    std::vector<int> path;
};

struct ReductionTrace {
    std::vector<std::pair<int, int>> degree_one;  // (deleted vertex, its neighbour), deletion order
    std::vector<DiamondEvent> diamonds;           // in application order
    std::vector<int> host_vertex;                 // reduced vertex -> host vertex
    std::vector<std::vector<int>> edge_paths;     // reduced edge id -> host vertex path
    bool cycle = false;                           // the 2-core is a cycle
    bool trivial = false;                         // the host is a tree
};

struct Reduction {
    Graph reduced;
    ReductionTrace trace;
};

// Degree-1 deletion (smallest id first), then the path rule on every maximal path of degree-2
// vertices between vertices of degree >= 3. Cycles and trees are flagged and left as the 2-core.
Reduction reduce_graph(const Graph& g);

// Rebuilds the host edge set from the reduced graph and the trace.
Graph replay_trace(const Reduction& r, int host_n);

// First violated size bound on the reduced graph (min degree 2, |V>=3| < 2 fes, degree sum < 6 fes,
// |E| < 9 fes), where fes is that of the host.
std::optional<std::string> reduction_bounds_violation(const Reduction& r, int host_fes);

// Maps a spanning tree of the reduced graph (edge ids) back to the host.
SpanningTree lift_tree(const Reduction& r, const Graph& host, const std::vector<int>& reduced_tree_edges);

struct FesResult {
    std::int64_t k = 0;
    SpanningTree tree;
    Reduction reduction;
    std::uint64_t trees_examined = 0;
};

FesResult solve_fes(const Graph& g, const EnumerationBudget& budget = {}, int threads = 1);

} // namespace stc
