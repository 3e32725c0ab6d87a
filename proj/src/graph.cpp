#include "stc/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "stc/errors.hpp"

namespace stc {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw InvalidInput("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return n_++;
}

std::uint64_t Graph::key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

int Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    auto k = key(u, v);
    if (index_.count(k))
        throw InvalidInput("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    int id = m();
    index_.emplace(k, id);
    edges_.push_back(make_edge(u, v));
    auto insert_sorted = [](std::vector<int>& a, int x) { a.insert(std::lower_bound(a.begin(), a.end(), x), x); };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    return id;
}

int Graph::edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    auto it = index_.find(key(u, v));
    return it == index_.end() ? -1 : it->second;
}

DoubleWeightedGraph::DoubleWeightedGraph(Graph g)
    : graph(std::move(g)), wt1(graph.m(), 1), wt2(graph.m(), 1) {}

DoubleWeightedGraph::DoubleWeightedGraph(Graph g, std::vector<std::int64_t> w1, std::vector<std::int64_t> w2)
    : graph(std::move(g)), wt1(std::move(w1)), wt2(std::move(w2)) {
    if (static_cast<int>(wt1.size()) != graph.m() || static_cast<int>(wt2.size()) != graph.m())
        throw InvalidInput("weight vector size mismatch");
    for (int e = 0; e < graph.m(); ++e)
        if (wt1[e] < 1 || wt2[e] < 1) throw InvalidInput("edge weights must be positive");
}

int DoubleWeightedGraph::add_edge(int u, int v, std::int64_t w1, std::int64_t w2) {
    if (w1 < 1 || w2 < 1) throw InvalidInput("edge weights must be positive");
    int id = graph.add_edge(u, v);
    wt1.push_back(w1);
    wt2.push_back(w2);
    return id;
}

bool DoubleWeightedGraph::single_weighted() const { return wt1 == wt2; }

bool DoubleWeightedGraph::unit_weighted() const {
    return std::all_of(wt1.begin(), wt1.end(), [](auto w) { return w == 1; }) &&
           std::all_of(wt2.begin(), wt2.end(), [](auto w) { return w == 1; });
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    std::vector<bool> removed(g.n(), false);
    return components(g, removed).size() == 1;
}

bool is_tree(const Graph& g) { return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g); }

int feedback_edge_number(const Graph& g) { return g.m() - g.n() + 1; }

std::vector<std::vector<int>> components(const Graph& g, const std::vector<bool>& removed) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(g.n(), false);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (removed[s] || seen[s]) continue;
        std::vector<int> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!removed[u] && !seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(g.n(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) pos[vertices[i]] = i;
    Graph h(static_cast<int>(vertices.size()));
    for (auto [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) h.add_edge(pos[u], pos[v]);
    return h;
}

Graph subdivide_edge(const Graph& g, int edge_id) {
    Graph h(g.n() + 1);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        if (e == edge_id) {
            h.add_edge(u, g.n());
            h.add_edge(g.n(), v);
        } else {
            h.add_edge(u, v);
        }
    }
    return h;
}

std::optional<std::string> spanning_tree_violation(const Graph& host, const std::vector<Edge>& edges) {
    if (host.n() == 0) return edges.empty() ? std::nullopt : std::optional<std::string>("edges on empty graph");
    if (static_cast<int>(edges.size()) != host.n() - 1)
        return "expected " + std::to_string(host.n() - 1) + " edges, got " + std::to_string(edges.size());
    std::vector<int> parent(host.n());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) {
        if (!host.has_edge(u, v))
            return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the graph";
        int a = find(u), b = find(v);
        if (a == b) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " closes a cycle";
        parent[a] = b;
    }
    return std::nullopt;
}

SpanningTree::SpanningTree(const Graph& host, std::vector<Edge> edges) : n_(host.n()), edges_(std::move(edges)) {
    for (auto& e : edges_) e = make_edge(e.first, e.second);
    std::sort(edges_.begin(), edges_.end());
    if (auto bad = spanning_tree_violation(host, edges_)) throw InvalidInput("not a spanning tree: " + *bad);
}

bool SpanningTree::contains(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
}

std::vector<std::vector<int>> twin_classes(const Graph& g, const std::vector<int>& s, TwinMode mode) {
    std::vector<bool> in_s(g.n(), false);
    for (int v : s) in_s[v] = true;
    std::map<std::vector<int>, std::vector<int>> groups;
    std::vector<std::vector<int>> order;  // signatures in order of first member
    for (int v = 0; v < g.n(); ++v) {
        if (in_s[v]) continue;
        std::vector<int> sig;
        if (!s.empty()) {
            for (int u : g.neighbors(v))
                if (in_s[u]) sig.push_back(u);
        } else {
            sig = g.neighbors(v);
            if (mode == TwinMode::Closed) sig.insert(std::lower_bound(sig.begin(), sig.end(), v), v);
        }
        auto [it, fresh] = groups.try_emplace(sig);
        if (fresh) order.push_back(sig);
        it->second.push_back(v);
    }
    std::vector<std::vector<int>> out;
    for (auto& sig : order) out.push_back(std::move(groups[sig]));
    return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool search_biclique(const Graph& g, int t, const std::vector<Bits>& nb, const std::vector<int>& cand, int from,
                     std::vector<int>& chosen, const Bits& common, std::vector<int>& witness) {
    int words = static_cast<int>(common.size());
    if (static_cast<int>(chosen.size()) == t) {
        witness.clear();
        for (int w = 0; w < words && static_cast<int>(witness.size()) < t; ++w)
            for (int b = 0; b < 64 && static_cast<int>(witness.size()) < t; ++b)
                if (common[w] >> b & 1) witness.push_back(w * 64 + b);
        return true;
    }
    for (int i = from; i < static_cast<int>(cand.size()); ++i) {
        if (static_cast<int>(cand.size()) - i < t - static_cast<int>(chosen.size())) break;
        int v = cand[i];
        Bits next(words);
        int count = 0;
        for (int w = 0; w < words; ++w) {
            next[w] = common[w] & nb[v][w];
            count += __builtin_popcountll(next[w]);
        }
        if (count < t) continue;
        chosen.push_back(v);
        if (search_biclique(g, t, nb, cand, i + 1, chosen, next, witness)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_biclique(const Graph& g, int t) {
    if (t < 1) throw InvalidInput("biclique size must be positive");
    if (2 * t > g.n()) return std::nullopt;
    int words = (g.n() + 63) / 64;
    std::vector<Bits> nb(g.n(), Bits(words, 0));
    for (auto [u, v] : g.edges()) {
        nb[u][v / 64] |= 1ULL << (v % 64);
        nb[v][u / 64] |= 1ULL << (u % 64);
    }
    std::vector<int> cand;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= t) cand.push_back(v);
    Bits all(words, 0);
    for (int v = 0; v < g.n(); ++v) all[v / 64] |= 1ULL << (v % 64);
    std::vector<int> chosen, witness;
    if (!search_biclique(g, t, nb, cand, 0, chosen, all, witness)) return std::nullopt;
    return std::make_pair(chosen, witness);
}

std::optional<int> stc_lower_bound_biclique(const Graph& g, int t) {
    if (t < 1 || !find_biclique(g, t)) return std::nullopt;
    return t;
}

} // namespace stc
