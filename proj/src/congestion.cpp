#include "stc/congestion.hpp"

#include <algorithm>

#include "stc/errors.hpp"

namespace stc {

std::int64_t CongestionReport::at(int u, int v) const {
    auto e = make_edge(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw InvalidInput("not a tree edge");
    return per_edge[it - edges.begin()];
}

CongestionEvaluator::CongestionEvaluator(const Graph& g)
    : CongestionEvaluator(DoubleWeightedGraph(g)) {
    // DoubleWeightedGraph copies the graph; keep pointing at the caller's instance.
    g_ = &g;
}

CongestionEvaluator::CongestionEvaluator(const DoubleWeightedGraph& g)
    : g_(&g.graph), w1_(g.wt1), w2_(g.wt2), wdeg_(g.graph.n(), 0) {
    for (int e = 0; e < g.graph.m(); ++e) {
        wdeg_[g.graph.edge(e).first] += w1_[e];
        wdeg_[g.graph.edge(e).second] += w1_[e];
    }
}

const std::vector<std::int64_t>& CongestionEvaluator::evaluate(const std::vector<int>& tree_edges) {
    const Graph& g = *g_;
    int n = g.n();
    head_.assign(n, -1);
    next_.clear();
    to_.clear();
    via_.clear();
    in_tree_.assign(g.m(), 0);
    for (int e : tree_edges) {
        in_tree_[e] = 1;
        auto [u, v] = g.edge(e);
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            next_.push_back(head_[a]);
            to_.push_back(b);
            via_.push_back(e);
            head_[a] = static_cast<int>(to_.size()) - 1;
        }
    }
    parent_.assign(n, -1);
    parent_edge_.assign(n, -1);
    depth_.assign(n, 0);
    order_.clear();
    if (n > 0) {
        order_.push_back(0);
        parent_[0] = 0;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            int v = order_[i];
            for (int a = head_[v]; a >= 0; a = next_[a]) {
                int u = to_[a];
                if (u == 0 || parent_edge_[u] >= 0) continue;
                parent_[u] = v;
                parent_edge_[u] = via_[a];
                depth_[u] = depth_[v] + 1;
                order_.push_back(u);
            }
        }
    }
    acc_ = wdeg_;
    for (int e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edge(e);
        while (a != b) {
            if (depth_[a] < depth_[b]) std::swap(a, b);
            a = parent_[a];
        }
        acc_[a] -= 2 * w1_[e];
    }
    for (int i = static_cast<int>(order_.size()) - 1; i > 0; --i) {
        int v = order_[i];
        acc_[parent_[v]] += acc_[v];
    }
    out_.assign(tree_edges.size(), 0);
    std::vector<std::int64_t> by_edge(g.m(), 0);
    for (int i = 1; i < static_cast<int>(order_.size()); ++i) {
        int v = order_[i];
        int e = parent_edge_[v];
        by_edge[e] = acc_[v] - w1_[e] + w2_[e];
    }
    for (std::size_t i = 0; i < tree_edges.size(); ++i) out_[i] = by_edge[tree_edges[i]];
    return out_;
}

std::int64_t CongestionEvaluator::max_congestion(const std::vector<int>& tree_edges) {
    const auto& c = evaluate(tree_edges);
    std::int64_t best = 0;
    for (auto x : c) best = std::max(best, x);
    return best;
}

namespace {

std::vector<int> tree_edge_ids(const Graph& g, const SpanningTree& t) {
    if (t.n() != g.n()) throw InvalidInput("tree and graph vertex counts differ");
    if (auto bad = spanning_tree_violation(g, t.edges())) throw InvalidInput("not a spanning tree: " + *bad);
    std::vector<int> ids;
    for (auto [u, v] : t.edges()) ids.push_back(g.edge_id(u, v));
    return ids;
}

CongestionReport finish(const SpanningTree& t, std::vector<std::int64_t> per) {
    CongestionReport r;
    r.edges = t.edges();
    r.per_edge = std::move(per);
    for (auto c : r.per_edge) r.max_congestion = std::max(r.max_congestion, c);
    return r;
}

} // namespace

CongestionReport congestion_report(const DoubleWeightedGraph& g, const SpanningTree& t) {
    auto ids = tree_edge_ids(g.graph, t);
    CongestionEvaluator ev(g);
    return finish(t, ev.evaluate(ids));
}

CongestionReport congestion_report(const Graph& g, const SpanningTree& t) {
    auto ids = tree_edge_ids(g, t);
    CongestionEvaluator ev(g);
    return finish(t, ev.evaluate(ids));
}

CongestionReport congestion_report_detour(const DoubleWeightedGraph& g, const SpanningTree& t) {
    auto ids = tree_edge_ids(g.graph, t);
    int n = g.graph.n();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e : ids) {
        auto [u, v] = g.graph.edge(e);
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    std::vector<std::int64_t> cong(g.graph.m(), 0);
    std::vector<int> prev_edge(n), prev(n), stack;
    for (int f = 0; f < g.graph.m(); ++f) {
        auto [a, b] = g.graph.edge(f);
        // DFS from a to b in the tree; the detour is the recovered path.
        std::fill(prev.begin(), prev.end(), -1);
        prev[a] = a;
        stack.assign(1, a);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, e] : adj[v])
                if (prev[u] < 0) {
                    prev[u] = v;
                    prev_edge[u] = e;
                    stack.push_back(u);
                }
        }
        bool tree_edge = std::find(ids.begin(), ids.end(), f) != ids.end();
        std::int64_t w = tree_edge ? g.wt2[f] : g.wt1[f];
        for (int v = b; v != a; v = prev[v]) cong[prev_edge[v]] += w;
    }
    std::vector<std::int64_t> per;
    for (int e : ids) per.push_back(cong[e]);
    return finish(t, per);
}

CongestionReport congestion_report_detour(const Graph& g, const SpanningTree& t) {
    return congestion_report_detour(DoubleWeightedGraph(g), t);
}

} // namespace stc
