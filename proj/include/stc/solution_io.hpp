#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stc/generators.hpp"
#include "stc/graph.hpp"

namespace stc {

struct Solution {
    std::int64_t k = 0;
    std::vector<Edge> edges;                         // 0-indexed
    std::map<std::string, std::int64_t> per_edge;    // "u-v" (1-indexed, u < v) -> congestion
    std::string algorithm;
    bool certified = false;                          // k is proven to be the optimum
};

// Fills k and per_edge from a fresh congestion evaluation.
Solution make_solution(const DoubleWeightedGraph& g, const SpanningTree& t, std::string algorithm, bool certified);

// Keys in the order k, edges, per_edge_congestion, algorithm, certified.
std::string solution_to_json(const Solution& s);
Solution parse_solution_json(const std::string& text);

// First disagreement between the file's claims and a recomputation on g.
std::optional<std::string> verify_solution(const DoubleWeightedGraph& g, const Solution& s);

std::string bundle_to_json(const InstanceBundle& b);

} // namespace stc
