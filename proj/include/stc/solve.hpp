#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stc/approx_grid.hpp"
#include "stc/decomposition.hpp"
#include "stc/graph.hpp"
#include "stc/oracle.hpp"

namespace stc {

enum class Algorithm { Auto, Trivial, Cycle, Oracle, Fes, Dtc, Vi, Dp, Approx, WinWin };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

// Auto-selection thresholds.
struct AutoLimits {
    int oracle_max_n = 12;
    int fes_max = 12;
    int vi_max_component = 6;
};

struct SolveConfig {
    Algorithm algorithm = Algorithm::Auto;
    std::optional<std::int64_t> k;               // decision mode
    std::optional<std::vector<int>> modulator;
    std::optional<int> clique_width;
    std::optional<TreeDecomposition> decomposition;
    Rational eps{1, 2};
    int threads = 1;
    EnumerationBudget budget;
    AutoLimits limits;
};

enum class Answer { Yes, No };

struct SolveOutcome {
    Answer answer = Answer::Yes;
    std::optional<SpanningTree> tree;  // present on Yes; congestion re-verified
    std::int64_t k = 0;                // congestion of tree, or the refuted bound on No
    Algorithm algorithm = Algorithm::Auto;
    bool certified = false;            // Yes: k is the optimum. No: the refutation is exact.
    std::string note;
};

// Unweighted graphs only; weighted inputs go through the oracle directly.
SolveOutcome solve(const Graph& g, const SolveConfig& cfg);

} // namespace stc
