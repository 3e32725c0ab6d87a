#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace stc {

// Normalized so that first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int add_vertex();
    // Throws InvalidInput on self-loops, duplicates or out-of-range ids. Returns the edge id.
    int add_edge(int u, int v);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
    int edge_id(int u, int v) const;

private:
    static std::uint64_t key(int u, int v);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::uint64_t, int> index_;
};

struct DoubleWeightedGraph {
    Graph graph;
    std::vector<std::int64_t> wt1, wt2;

    DoubleWeightedGraph() = default;
    explicit DoubleWeightedGraph(Graph g);
    DoubleWeightedGraph(Graph g, std::vector<std::int64_t> w1, std::vector<std::int64_t> w2);

    int add_edge(int u, int v, std::int64_t w1, std::int64_t w2);
    bool single_weighted() const;
    bool unit_weighted() const;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
// m - n + 1, for connected graphs.
int feedback_edge_number(const Graph& g);

// Components of g restricted to vertices with !removed[v]; each sorted, listed by smallest member.
std::vector<std::vector<int>> components(const Graph& g, const std::vector<bool>& removed);

// Subgraph induced by vertices (in the given order); new id i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Subdivide edge id once; the new vertex gets id n.
Graph subdivide_edge(const Graph& g, int edge_id);

class SpanningTree {
public:
    SpanningTree() = default;
    // Validates against the host; throws InvalidInput when edges do not form a spanning tree.
    SpanningTree(const Graph& host, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool contains(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;  // sorted
};

// Returns an explanation when edges do not form a spanning tree of host.
std::optional<std::string> spanning_tree_violation(const Graph& host, const std::vector<Edge>& edges);

enum class TwinMode { Open, Closed };

// Classes of V minus S by N(v) ∩ S. For empty S uses N(v) (Open) or N[v] (Closed).
std::vector<std::vector<int>> twin_classes(const Graph& g, const std::vector<int>& s,
                                           TwinMode mode = TwinMode::Open);

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_biclique(const Graph& g, int t);
std::optional<int> stc_lower_bound_biclique(const Graph& g, int t);

} // namespace stc
