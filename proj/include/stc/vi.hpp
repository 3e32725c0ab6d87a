#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stc/graph.hpp"
#include "stc/oracle.hpp"

namespace stc {

// A component of G - S up to isomorphisms that preserve S-neighbourhoods. Positions 0..size-1 are the
// canonical vertex order.
struct ComponentType {
    int size = 0;
    std::vector<std::uint64_t> s_mask;           // per position, bit i = adjacent to S[i]
    std::vector<std::vector<char>> adj;          // position adjacency
    std::vector<std::vector<int>> automorphisms; // position permutations, identity first
};

// Edges of T inside C_S other than those within S. Position pairs (i < j) and (position, S index).
struct ForestPattern {
    std::vector<std::pair<int, int>> internal;
    std::vector<std::pair<int, int>> attach;
    bool leaf = false;  // every piece of T[C] has exactly one edge to S
};

struct ComponentClass {
    int type = -1;
    std::vector<std::vector<int>> members;  // each component's vertices listed by canonical position
};

struct TypeCatalog {
    std::vector<int> s;  // sorted
    std::vector<ComponentType> types;
    std::vector<ComponentClass> classes;               // one per type, same index
    std::vector<std::vector<ForestPattern>> patterns;  // per type, one per forest type, canonical order
};

// Throws InvalidInput when a component exceeds max_component vertices.
TypeCatalog enumerate_types(const Graph& g, const std::vector<int>& s, int max_component = 6);

struct VIOptions {
    EnumerationBudget budget;
    int threads = 1;
    bool precheck = false;  // try the treewidth DP for every s < vi^2 first
    int max_component = 6;
};

struct VIResult {
    std::int64_t k = 0;
    SpanningTree tree;
    bool precheck_hit = false;
    std::uint64_t guesses = 0;     // (non-leaf choice, T_H) pairs
    std::uint64_t ilp_solves = 0;
    std::vector<std::int64_t> signature;  // optimal counts, flattened over (class, pattern); non-leaf patterns stay 0
};

VIResult solve_vi(const Graph& g, const std::vector<int>& s, const VIOptions& opt = {});

// T_H edges plus, per class, counts[i][j] components realising pattern j, taken in the sequence
// order[i] (indices into the class's members not covered by H).
SpanningTree tree_from_signature(const Graph& g, const TypeCatalog& cat, const std::vector<Edge>& t_h,
                                 const std::vector<std::vector<std::int64_t>>& counts,
                                 const std::vector<std::vector<int>>& order);

struct VertexIntegrity {
    std::vector<int> s;
    int value = 0;  // |S| + largest component of G - S
};

// Minimum over S, by size then lexicographic; nothing when vi(g) > cap.
std::optional<VertexIntegrity> vertex_integrity_set(const Graph& g, int cap);

} // namespace stc
