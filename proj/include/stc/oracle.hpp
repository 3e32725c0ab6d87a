#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stc/graph.hpp"

namespace stc {

struct EnumerationBudget {
    std::uint64_t max_trees = 200'000'000;
    std::int64_t max_millis = 600'000;

    // STC_MAX_TREES / STC_MAX_MILLIS override the defaults.
    static EnumerationBudget from_env();
};

// Receives the edge ids of each tree; return false to stop the enumeration.
using TreeVisitor = std::function<bool(const std::vector<int>&)>;

// Every spanning tree exactly once, in a fixed order determined by edge ids. Returns the count.
std::uint64_t enumerate_spanning_trees(const Graph& g, const EnumerationBudget& budget, const TreeVisitor& visit);
std::vector<SpanningTree> all_spanning_trees(const Graph& g, const EnumerationBudget& budget = {});

struct OracleResult {
    std::int64_t k = 0;
    SpanningTree tree;
    std::uint64_t trees_examined = 0;
};

// threads == 1 runs the serial reference; other values split the search on decision prefixes.
// Both return the first optimal tree in enumeration order.
OracleResult stc_exact(const Graph& g, const EnumerationBudget& budget = {}, int threads = 1);
OracleResult stc_exact(const DoubleWeightedGraph& g, const EnumerationBudget& budget = {}, int threads = 1);

// Decision version with early exit.
std::optional<SpanningTree> stc_at_most(const DoubleWeightedGraph& g, std::int64_t k,
                                        const EnumerationBudget& budget = {});

boost::multiprecision::cpp_int kirchhoff_tree_count(const Graph& g);

} // namespace stc
