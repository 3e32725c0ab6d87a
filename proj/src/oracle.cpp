#include "stc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stc/congestion.hpp"
#include "stc/errors.hpp"

namespace stc {

EnumerationBudget EnumerationBudget::from_env() {
    EnumerationBudget b;
    if (const char* s = std::getenv("STC_MAX_TREES")) b.max_trees = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("STC_MAX_MILLIS")) b.max_millis = std::strtoll(s, nullptr, 10);
    if (b.max_trees == 0 || b.max_millis <= 0) throw InvalidInput("budget caps must be positive");
    return b;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedBudget {
    EnumerationBudget caps;
    Clock::time_point start = Clock::now();
    std::atomic<std::uint64_t> emitted{0};
    std::atomic<bool> exceeded{false};

    // Called once per emitted tree.
    bool charge() {
        auto c = emitted.fetch_add(1, std::memory_order_relaxed) + 1;
        if (c > caps.max_trees) {
            exceeded = true;
            return false;
        }
        if ((c & 1023) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
            if (ms > caps.max_millis) {
                exceeded = true;
                return false;
            }
        }
        return !exceeded.load(std::memory_order_relaxed);
    }
};

// Include/exclude recursion over edges in id order. Including is allowed when it closes no cycle; excluding
// is allowed while the remaining edges stay connected, so every branch ends in a spanning tree.
class Enumerator {
public:
    Enumerator(const Graph& g) : g_(g), parent_(g.n()), rank_(g.n(), 0), excluded_(g.m(), 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
        seen_.resize(g.n());
    }

    // path: one bit per decided edge (1 = include), applied without recursion.
    void replay(const std::vector<char>& path) {
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (path[i]) {
                unite(g_.edge(static_cast<int>(i)).first, g_.edge(static_cast<int>(i)).second);
                included_.push_back(static_cast<int>(i));
            } else {
                excluded_[i] = 1;
            }
        }
    }

    // Visits trees below (edge index i). Returns false when the visitor asked to stop.
    template <class Visit>
    bool run(int i, Visit&& visit) {
        if (static_cast<int>(included_.size()) == g_.n() - 1) return visit(included_);
        auto [u, v] = g_.edge(i);
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            auto mark = history_.size();
            unite(u, v);
            included_.push_back(i);
            bool go = run(i + 1, visit);
            included_.pop_back();
            rollback(mark);
            if (!go) return false;
        }
        if (ru == rv || !is_bridge(i)) {
            excluded_[i] = 1;
            bool go = run(i + 1, visit);
            excluded_[i] = 0;
            if (!go) return false;
        }
        return true;
    }

    // Decision prefixes of length depth in DFS order (shorter when a tree completes early).
    void prefixes(int i, int depth, std::vector<char>& path, std::vector<std::vector<char>>& out) {
        if (static_cast<int>(included_.size()) == g_.n() - 1 || i == depth) {
            out.push_back(path);
            return;
        }
        auto [u, v] = g_.edge(i);
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            auto mark = history_.size();
            unite(u, v);
            included_.push_back(i);
            path.push_back(1);
            prefixes(i + 1, depth, path, out);
            path.pop_back();
            included_.pop_back();
            rollback(mark);
        }
        if (ru == rv || !is_bridge(i)) {
            excluded_[i] = 1;
            path.push_back(0);
            prefixes(i + 1, depth, path, out);
            path.pop_back();
            excluded_[i] = 0;
        }
    }

private:
    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (rank_[a] < rank_[b]) std::swap(a, b);
        history_.push_back({b, rank_[a]});
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }
    void rollback(std::size_t mark) {
        while (history_.size() > mark) {
            auto [b, old_rank] = history_.back();
            history_.pop_back();
            int a = parent_[b];
            rank_[a] = old_rank;
            parent_[b] = b;
        }
    }
    // Whether removing edge i disconnects the graph of non-excluded edges.
    bool is_bridge(int i) {
        auto [u, v] = g_.edge(i);
        std::fill(seen_.begin(), seen_.end(), 0);
        stack_.assign(1, u);
        seen_[u] = 1;
        while (!stack_.empty()) {
            int x = stack_.back();
            stack_.pop_back();
            for (int y : g_.neighbors(x)) {
                if (seen_[y]) continue;
                int e = g_.edge_id(x, y);
                if (e == i || excluded_[e]) continue;
                if (y == v) return false;
                seen_[y] = 1;
                stack_.push_back(y);
            }
        }
        return true;
    }

    const Graph& g_;
    std::vector<int> parent_, rank_;
    std::vector<char> excluded_;
    std::vector<int> included_;
    std::vector<std::pair<int, int>> history_;
    std::vector<char> seen_;
    std::vector<int> stack_;
};

void require_connected(const Graph& g) {
    if (g.n() == 0) throw InvalidInput("empty graph");
    if (!is_connected(g)) throw Disconnected();
}

struct Best {
    std::int64_t value = LLONG_MAX;
    std::vector<int> ids;
};

// Minimum over the trees of g; lower_bound lets the search stop once reached.
OracleResult minimize(const DoubleWeightedGraph& wg, const EnumerationBudget& budget, int threads,
                      std::int64_t lower_bound) {
    const Graph& g = wg.graph;
    require_connected(g);
    SharedBudget shared{budget};
    if (g.n() == 1) return {0, SpanningTree(g, {}), 1};

    std::vector<std::vector<char>> tasks;
#ifdef _OPENMP
    if (threads != 1) {
        Enumerator splitter(g);
        std::vector<char> path;
        int depth = std::min(g.m(), 12);
        splitter.prefixes(0, depth, path, tasks);
    }
#endif
    if (tasks.empty()) tasks.push_back({});

    std::vector<Best> best(tasks.size());
    std::atomic<long> stop_after{LONG_MAX};  // tasks after one that reached the lower bound are moot

    auto solve_task = [&](long t) {
        if (t > stop_after.load()) return;
        Enumerator en(g);
        en.replay(tasks[t]);
        CongestionEvaluator ev(wg);
        Best& b = best[t];
        en.run(static_cast<int>(tasks[t].size()), [&](const std::vector<int>& ids) {
            if (!shared.charge()) return false;
            auto c = ev.max_congestion(ids);
            if (c < b.value) {
                b.value = c;
                b.ids = ids;
            }
            if (b.value <= lower_bound) {
                long cur = stop_after.load();
                while (t < cur && !stop_after.compare_exchange_weak(cur, t)) {
                }
                return false;
            }
            return t <= stop_after.load();
        });
    };

#ifdef _OPENMP
    if (threads != 1) {
        int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
        for (long t = 0; t < static_cast<long>(tasks.size()); ++t) solve_task(t);
    } else {
        solve_task(0);
    }
#else
    (void)threads;
    solve_task(0);
#endif

    if (shared.exceeded)
        throw BudgetExceeded(std::min<std::uint64_t>(shared.emitted.load(), budget.max_trees),
                             "spanning tree enumeration budget exceeded");
    std::size_t pick = 0;
    for (std::size_t t = 1; t < best.size(); ++t)
        if (best[t].value < best[pick].value) pick = t;
    std::vector<Edge> edges;
    for (int e : best[pick].ids) edges.push_back(g.edge(e));
    return {best[pick].value, SpanningTree(g, edges), shared.emitted.load()};
}

} // namespace

std::uint64_t enumerate_spanning_trees(const Graph& g, const EnumerationBudget& budget, const TreeVisitor& visit) {
    require_connected(g);
    SharedBudget shared{budget};
    if (g.n() == 1) {
        if (!shared.charge()) throw BudgetExceeded(0, "spanning tree enumeration budget exceeded");
        visit({});
        return 1;
    }
    Enumerator en(g);
    std::uint64_t count = 0;
    en.run(0, [&](const std::vector<int>& ids) {
        if (!shared.charge()) return false;
        ++count;
        return visit(ids);
    });
    if (shared.exceeded) throw BudgetExceeded(count, "spanning tree enumeration budget exceeded");
    return count;
}

std::vector<SpanningTree> all_spanning_trees(const Graph& g, const EnumerationBudget& budget) {
    std::vector<SpanningTree> out;
    enumerate_spanning_trees(g, budget, [&](const std::vector<int>& ids) {
        std::vector<Edge> edges;
        for (int e : ids) edges.push_back(g.edge(e));
        out.emplace_back(g, edges);
        return true;
    });
    return out;
}

OracleResult stc_exact(const Graph& g, const EnumerationBudget& budget, int threads) {
    std::int64_t lb = g.m() >= g.n() ? 2 : 1;
    return minimize(DoubleWeightedGraph(g), budget, threads, lb);
}

OracleResult stc_exact(const DoubleWeightedGraph& g, const EnumerationBudget& budget, int threads) {
    return minimize(g, budget, threads, 0);
}

std::optional<SpanningTree> stc_at_most(const DoubleWeightedGraph& g, std::int64_t k, const EnumerationBudget& budget) {
    auto r = minimize(g, budget, 1, k);
    if (r.k <= k) return r.tree;
    return std::nullopt;
}

boost::multiprecision::cpp_int kirchhoff_tree_count(const Graph& g) {
    using boost::multiprecision::cpp_int;
    int n = g.n() - 1;
    if (n <= 0) return 1;
    std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n, 0));
    for (auto [u, v] : g.edges()) {
        if (u < n) a[u][u] += 1;
        if (v < n) a[v][v] += 1;
        if (u < n && v < n) {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }
    // Bareiss fraction-free elimination; every division is exact.
    cpp_int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace stc
