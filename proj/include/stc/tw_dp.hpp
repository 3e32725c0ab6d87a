#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stc/approx_grid.hpp"
#include "stc/decomposition.hpp"
#include "stc/graph.hpp"

namespace stc {

struct DPOptions {
    bool validate = false;     // check every stored entry against the consistent-solution properties
    bool keep_tables = false;  // retain all node tables (see DPRun)
};

struct DPStats {
    std::size_t total_states = 0;
    std::size_t max_table = 0;
    std::size_t max_skeleton = 0;  // largest |V(S)| seen
};

// One stored state: the (S, labels) part and the congestion map separately.
struct DPStateView {
    std::vector<std::uint16_t> shape;  // canonical skeleton with labels
    std::vector<std::uint16_t> c;      // per skeleton edge; exact values or grid indices
};

struct DPRun {
    std::optional<SpanningTree> tree;
    DPStats stats;
    std::vector<std::vector<DPStateView>> tables;  // per nice node, when keep_tables
};

// Exact DP: a tree with congestion <= k, or nothing.
DPRun run_exact_dp(const Graph& g, std::int64_t k, const NiceTreeDecomposition& ntd, const DPOptions& opt = {});
// Rounded DP on the grid (grid.k() is the target); the tree's true congestion is not checked here.
DPRun run_approx_dp(const Graph& g, const RoundingGrid& grid, const NiceTreeDecomposition& ntd,
                    const DPOptions& opt = {});

std::optional<SpanningTree> solve_exact_tw(const Graph& g, std::int64_t k, const NiceTreeDecomposition& ntd);
std::optional<SpanningTree> solve_exact_tw(const Graph& g, std::int64_t k);

struct TwSolution {
    std::int64_t k = 0;
    SpanningTree tree;
};

// Smallest k with a feasible DP, trying k = 1, 2, ...
TwSolution solve_stc_tw(const Graph& g, const NiceTreeDecomposition& ntd);
TwSolution solve_stc_tw(const Graph& g);

struct ApproxSolution {
    SpanningTree tree;
    std::int64_t k_tried = 0;     // first k for which the rounded DP succeeded
    std::int64_t congestion = 0;  // exact congestion of tree
};

ApproxSolution solve_approx_tw(const Graph& g, Rational eps, const NiceTreeDecomposition& ntd);
ApproxSolution solve_approx_tw(const Graph& g, Rational eps);

struct ApproxAudit {
    bool ok = true;
    std::string message;
    std::size_t exact_states = 0, approx_states = 0;
};

// Runs exact DP at k, rounded DP at (eps, k) and exact DP at floor((1+eps)k) on the same decomposition and
// checks, node by node: every exact state has a rounded counterpart with c_hat <= (1+delta)^h_t * c, and
// every rounded state dominates an exact state with c <= ceil(c_hat).
ApproxAudit audit_approx_invariants(const Graph& g, Rational eps, std::int64_t k, const NiceTreeDecomposition& ntd);

} // namespace stc
