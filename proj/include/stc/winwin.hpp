#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

enum class WinWinAnswer { Yes, No, NoByBiclique };

struct WinWinResult {
    WinWinAnswer answer = WinWinAnswer::No;
    std::optional<SpanningTree> tree;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> biclique;
    int decomposition_width = 0;
    bool used_dp = false;
};

// Decides stc(g) <= k given a claimed clique-width w. Small decomposition width: run the DP.
// Otherwise look for K_{k+1,k+1}; if the (heuristic) decomposition was merely loose, fall back to the DP.
WinWinResult solve_cw_winwin(const Graph& g, std::int64_t k, int w);

} // namespace stc
