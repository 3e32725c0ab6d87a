#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;  // each sorted
    std::vector<Edge> tree;              // over bag ids

    int width() const;
};

enum class DecompositionMode { Heuristic, ExactSmall };

// Heuristic: min-fill elimination, min-degree then smallest id as tie-breaks.
// ExactSmall: optimal elimination order by subset DP; refuses n > 12.
TreeDecomposition decompose(const Graph& g, DecompositionMode mode = DecompositionMode::Heuristic);
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order);
int treewidth_exact(const Graph& g);

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    int vertex = -1;            // introduced / forgotten vertex
    std::vector<int> children;  // ids smaller than this node's id
    std::vector<int> bag;       // sorted
    int height = 0;             // distance to the deepest leaf below
};

struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;  // children before parents; root is the last node
    int root = -1;

    int width() const;
    int height() const { return root < 0 ? 0 : nodes[root].height; }
};

// Roots the decomposition at bag 0. Between a bag and each child, forgets then introduces in vertex
// order; several children become a chain of joins. Empty bags are contracted away first.
NiceTreeDecomposition make_nice(const TreeDecomposition& td);
NiceTreeDecomposition nice_decomposition(const Graph& g, DecompositionMode mode = DecompositionMode::Heuristic);

std::optional<std::string> validate_td(const Graph& g, const TreeDecomposition& td);
std::optional<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);
TreeDecomposition as_tree_decomposition(const NiceTreeDecomposition& ntd);

// PACE .td format, 1-indexed.
TreeDecomposition parse_td(const std::string& text, int n);
std::string write_td(const TreeDecomposition& td, int n);

} // namespace stc
