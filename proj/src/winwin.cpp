#include "stc/winwin.hpp"

#include "stc/decomposition.hpp"
#include "stc/errors.hpp"
#include "stc/tw_dp.hpp"

namespace stc {

WinWinResult solve_cw_winwin(const Graph& g, std::int64_t k, int w) {
    if (w < 1) throw InvalidInput("clique-width must be at least 1");
    if (k < 1) throw InvalidInput("k must be positive");
    if (g.n() == 0) throw InvalidInput("empty graph");
    if (!is_connected(g)) throw Disconnected();
    WinWinResult out;
    auto ntd = nice_decomposition(g);
    out.decomposition_width = ntd.width();
    std::int64_t threshold = 6 * (k + 1) * w + 1;
    if (out.decomposition_width > threshold) {
        if (k + 1 <= g.n() / 2) {
            if (auto bc = find_biclique(g, static_cast<int>(k + 1))) {
                out.answer = WinWinAnswer::NoByBiclique;
                out.biclique = bc;
                return out;
            }
        }
    }
    out.used_dp = true;
    out.tree = solve_exact_tw(g, k, ntd);
    out.answer = out.tree ? WinWinAnswer::Yes : WinWinAnswer::No;
    return out;
}

} // namespace stc
