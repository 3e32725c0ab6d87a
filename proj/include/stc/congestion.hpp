#pragma once

#include <cstdint>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

struct CongestionReport {
    std::vector<Edge> edges;               // tree edges, sorted
    std::vector<std::int64_t> per_edge;    // aligned with edges
    std::int64_t max_congestion = 0;

    std::int64_t at(int u, int v) const;
};

// Subtree aggregation: near-linear in m.
CongestionReport congestion_report(const Graph& g, const SpanningTree& t);
CongestionReport congestion_report(const DoubleWeightedGraph& g, const SpanningTree& t);

// Reference: walks every detour explicitly. Quadratic.
CongestionReport congestion_report_detour(const Graph& g, const SpanningTree& t);
CongestionReport congestion_report_detour(const DoubleWeightedGraph& g, const SpanningTree& t);

// Repeated evaluation on one host, tree given by edge ids. No validation; not thread-safe.
class CongestionEvaluator {
public:
    explicit CongestionEvaluator(const Graph& g);
    explicit CongestionEvaluator(const DoubleWeightedGraph& g);

    // Congestion per tree edge, aligned with tree_edges.
    const std::vector<std::int64_t>& evaluate(const std::vector<int>& tree_edges);
    std::int64_t max_congestion(const std::vector<int>& tree_edges);

private:
    const Graph* g_;
    std::vector<std::int64_t> w1_, w2_, wdeg_;
    std::vector<int> head_, next_, to_, via_;
    std::vector<int> parent_, parent_edge_, depth_, order_;
    std::vector<std::int64_t> acc_, out_;
    std::vector<char> in_tree_;
};

} // namespace stc
