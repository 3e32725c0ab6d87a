#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stc/graph.hpp"
#include "stc/oracle.hpp"

namespace stc {

struct DtcOptions {
    EnumerationBudget budget;
    int threads = 1;
    // Skip the small-instance hand-off to the oracle and always run the structured enumeration.
    bool force_enumeration = false;
};

struct DtcResult {
    std::int64_t k = 0;
    SpanningTree tree;
    bool small_case = false;         // answered by the oracle
    std::uint64_t candidates = 0;    // trees evaluated by the enumeration
};

// S must be a clique modulator of the connected graph g (g - S complete and nonempty).
DtcResult solve_dtc(const Graph& g, const std::vector<int>& s, const DtcOptions& opt = {});

// Hub r adjacent to every heavy modulator vertex, a star over C and N(r) ∩ S, a maximum matching
// from the remaining modulator vertices, and the leftovers attached in edge order.
SpanningTree dtc_bound_tree(const Graph& g, const std::vector<int>& s);

// k < 2N - N/q + 2q^2, compared exactly; for q = 0 the star bound k <= N - 1.
bool dtc_bound_satisfied(std::int64_t k, std::int64_t n_clique, std::int64_t q);

// The small case threshold N <= 2q^3 + 4q.
bool dtc_is_small(std::int64_t n_clique, std::int64_t q);

// Smallest modulator by size then lexicographic order, or nothing if every one is larger than cap.
std::optional<std::vector<int>> find_clique_modulator(const Graph& g, int cap);

} // namespace stc
