#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stc/gadgets.hpp"
#include "stc/graph.hpp"

namespace stc {

struct InstanceBundle {
    std::string construction;                           // "ubp", "3partition", "bsat", "grid"
    std::map<std::string, std::int64_t> parameters;
    DoubleWeightedGraph weighted;                       // the construction before expansion
    Graph graph;                                        // unweighted; host vertices keep their ids
    std::optional<Expansion> expansion;
    std::int64_t k = 0;
    std::map<std::string, std::vector<int>> groups;     // named vertex groups, host ids
    std::optional<SpanningTree> witness;                // on graph
};

enum class UbpFamily { Stars, Cliques };

// Vertices: V_1..V_n (star centre first), then Q = v_1..v_t, then r.
InstanceBundle gen_ubp(int t, const std::vector<int>& a, UbpFamily family);
// Vertices: V_1..V_3n, Q, C, w.
InstanceBundle gen_3partition(const std::vector<int>& a, int b);

// Literal +i / -i for variable i (1-indexed). Vertices per variable: x_i, y_i, xbar_i, z_i; then c_1..c_m.
using Clause = std::vector<int>;
InstanceBundle gen_bsat(const std::vector<Clause>& formula);
InstanceBundle gen_grid(int n, std::uint64_t seed = 1);

// Reference trees on the weighted graph. assignment[i] is the bin (0-based) of item i; alpha[i] the
// value of variable i+1. The checked versions reject certificates that are not solutions.
SpanningTree ubp_tree(const InstanceBundle& b, const std::vector<int>& assignment);
SpanningTree three_partition_tree(const InstanceBundle& b, const std::vector<int>& assignment);
// clause_choice[j]: index within clause j of the literal its clause vertex hangs from; empty = first true one.
SpanningTree bsat_tree(const InstanceBundle& b, const std::vector<bool>& alpha, std::vector<int> clause_choice = {});

SpanningTree ubp_witness(const InstanceBundle& b, const std::vector<int>& assignment);
SpanningTree three_partition_witness(const InstanceBundle& b, const std::vector<int>& assignment);
SpanningTree bsat_witness(const InstanceBundle& b, const std::vector<bool>& alpha);

// Lifts a weighted-graph tree to the unweighted graph (identity when nothing was expanded).
SpanningTree to_unweighted(const InstanceBundle& b, const SpanningTree& weighted_tree);

bool is_module(const Graph& g, const std::vector<int>& x);

// A small (3,B2) formula: (x1, -x2, x3), (x1, x2, -x3), (-x1, -x2, x3), (-x1, x2, -x3).
std::vector<Clause> example_bsat_formula();

} // namespace stc
