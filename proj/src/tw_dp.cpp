#include "stc/tw_dp.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "stc/congestion.hpp"
#include "stc/errors.hpp"
#include "stc/skeleton.hpp"

namespace stc {

namespace {

using Code = std::vector<std::uint16_t>;

struct CodeHash {
    std::size_t operator()(const Code& c) const { return boost::hash_range(c.begin(), c.end()); }
};

// Persistent forest: introduce adds a chunk on top of the child's, join links two.
struct ForestChunk {
    std::vector<Edge> edges;
    std::shared_ptr<const ForestChunk> left, right;
};
using Forest = std::shared_ptr<const ForestChunk>;

std::vector<Edge> materialize(const Forest& f) {
    std::vector<Edge> out;
    std::vector<const ForestChunk*> stack;
    if (f) stack.push_back(f.get());
    while (!stack.empty()) {
        auto* c = stack.back();
        stack.pop_back();
        out.insert(out.end(), c->edges.begin(), c->edges.end());
        if (c->left) stack.push_back(c->left.get());
        if (c->right) stack.push_back(c->right.get());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Canonical skeleton state. Node 0 is the first bag vertex; bag vertices keep their bag positions,
// anonymous nodes follow in preorder with children ordered by the smallest bag position below them.
struct State {
    int V = 0, b = 0;
    std::vector<int> parent, vl, el;  // el[i], c[i]: edge from i to parent[i]
    std::vector<std::uint32_t> c;
};

// Layout: V, b, parent[1..V), el+1, vl+1 for anonymous nodes, then c[1..V).
Code encode(const State& s) {
    Code code;
    code.reserve(2 + 3 * s.V);
    code.push_back(static_cast<std::uint16_t>(s.V));
    code.push_back(static_cast<std::uint16_t>(s.b));
    for (int i = 1; i < s.V; ++i) code.push_back(static_cast<std::uint16_t>(s.parent[i]));
    for (int i = 1; i < s.V; ++i) code.push_back(static_cast<std::uint16_t>(s.el[i] + 1));
    for (int i = s.b; i < s.V; ++i) code.push_back(static_cast<std::uint16_t>(s.vl[i] + 1));
    for (int i = 1; i < s.V; ++i) code.push_back(static_cast<std::uint16_t>(s.c[i]));
    return code;
}

std::size_t shape_length(const Code& code) {
    int V = code[0], b = code[1];
    return 2 + 2 * static_cast<std::size_t>(std::max(V - 1, 0)) + (V - b);
}

State decode(const Code& code) {
    State s;
    s.V = code[0];
    s.b = code[1];
    s.parent.assign(s.V, -1);
    s.vl.assign(s.V, 0);
    s.el.assign(s.V, 0);
    s.c.assign(s.V, 0);
    std::size_t p = 2;
    for (int i = 1; i < s.V; ++i) s.parent[i] = code[p++];
    for (int i = 1; i < s.V; ++i) s.el[i] = code[p++] - 1;
    for (int i = s.b; i < s.V; ++i) s.vl[i] = code[p++] - 1;
    for (int i = 1; i < s.V; ++i) s.c[i] = code[p++];
    return s;
}

QuasiSkeleton to_quasi(const State& s, const std::vector<int>& bag, const std::vector<int>& anchors) {
    QuasiSkeleton q;
    for (int i = 0; i < s.V; ++i) q.add_node(i < s.b ? bag[i] : -1, s.vl[i], anchors[i]);
    for (int i = 1; i < s.V; ++i) q.add_link(i, s.parent[i], s.el[i], s.c[i]);
    return q;
}

struct Canonical {
    Code code;
    std::vector<int> anchors;
};

Canonical canonicalize(const QuasiSkeleton& q, const std::vector<int>& bag) {
    int b = static_cast<int>(bag.size());
    int total = static_cast<int>(q.nodes.size());
    Canonical out;
    if (b == 0) {
        if (q.alive_nodes() != 0) throw std::logic_error("skeleton over an empty bag is not empty");
        out.code = {0, 0};
        return out;
    }
    std::vector<std::vector<std::pair<int, int>>> adj(total);
    for (int l = 0; l < static_cast<int>(q.links.size()); ++l) {
        auto& lk = q.links[l];
        if (!lk.alive) continue;
        adj[lk.a].push_back({lk.b, l});
        adj[lk.b].push_back({lk.a, l});
    }
    std::vector<int> bagpos(total, -1);
    int root = -1;
    for (int i = 0; i < total; ++i) {
        if (!q.nodes[i].alive || q.nodes[i].vertex < 0) continue;
        auto it = std::lower_bound(bag.begin(), bag.end(), q.nodes[i].vertex);
        if (it == bag.end() || *it != q.nodes[i].vertex) throw std::logic_error("skeleton names a non-bag vertex");
        bagpos[i] = static_cast<int>(it - bag.begin());
        if (bagpos[i] == 0) root = i;
    }
    if (root < 0) throw std::logic_error("skeleton misses a bag vertex");
    std::vector<int> par(total, -2), plink(total, -1), order;
    par[root] = -1;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto [y, l] : adj[order[i]])
            if (par[y] == -2) {
                par[y] = order[i];
                plink[y] = l;
                order.push_back(y);
            }
    int V = static_cast<int>(order.size());
    if (V != q.alive_nodes()) throw std::logic_error("skeleton is not connected");
    std::vector<int> minpos(total, 1 << 30);
    for (int i = V - 1; i >= 0; --i) {
        int x = order[i];
        if (bagpos[x] >= 0) minpos[x] = std::min(minpos[x], bagpos[x]);
        if (par[x] >= 0) minpos[par[x]] = std::min(minpos[par[x]], minpos[x]);
    }
    std::vector<int> id(total, -1);
    int next_anon = b, bag_seen = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (bagpos[x] >= 0) {
            id[x] = bagpos[x];
            ++bag_seen;
        } else {
            id[x] = next_anon++;
        }
        std::vector<std::pair<int, int>> kids;
        for (auto [y, l] : adj[x])
            if (y != par[x]) kids.push_back({minpos[y], y});
        std::sort(kids.rbegin(), kids.rend());
        for (auto [m, y] : kids) stack.push_back(y);
    }
    if (bag_seen != b) throw std::logic_error("skeleton misses a bag vertex");
    State s;
    s.V = V;
    s.b = b;
    s.parent.assign(V, -1);
    s.vl.assign(V, 0);
    s.el.assign(V, 0);
    s.c.assign(V, 0);
    out.anchors.assign(V, -1);
    for (int x : order) {
        int i = id[x];
        s.vl[i] = q.nodes[x].label;
        out.anchors[i] = q.nodes[x].anchor;
        if (par[x] >= 0) {
            s.parent[i] = id[par[x]];
            s.el[i] = q.links[plink[x]].label;
            s.c[i] = q.links[plink[x]].c;
        }
    }
    out.code = encode(s);
    return out;
}

struct Entry {
    Code code;
    Forest forest;
    std::vector<int> anchors;
};

struct Table {
    std::vector<Entry> entries;
    std::unordered_map<Code, int, CodeHash> index;

    void insert(Canonical&& cn, Forest forest) {
        if (index.count(cn.code)) return;
        index.emplace(cn.code, static_cast<int>(entries.size()));
        entries.push_back({std::move(cn.code), std::move(forest), std::move(cn.anchors)});
    }
};

// Congestion arithmetic: plain integers capped at k, or grid indices with upward rounding.
class Arith {
public:
    explicit Arith(std::int64_t k) : k_(k) {
        if (k > 60000) throw InvalidInput("k too large for the skeleton DP");
    }
    explicit Arith(const RoundingGrid* grid) : k_(-1), grid_(grid) {}

    bool exact() const { return grid_ == nullptr; }
    std::int64_t k() const { return k_; }

    bool add(std::uint32_t& c, std::uint32_t r) {
        if (exact()) {
            if (c + r > k_) return false;
            c += r;
            return true;
        }
        std::uint64_t key = (static_cast<std::uint64_t>(c) << 32) | r;
        auto it = add_memo_.find(key);
        long idx;
        if (it != add_memo_.end()) {
            idx = it->second;
        } else {
            idx = grid_->round_up(grid_->scaled(c) + RoundingGrid::Int(r) * grid_->scale());
            add_memo_.emplace(key, idx);
        }
        if (idx < 0) return false;
        c = static_cast<std::uint32_t>(idx);
        return true;
    }

    bool sum(std::uint32_t a, std::uint32_t b, std::uint32_t& out) {
        if (exact()) {
            if (a + b > k_) return false;
            out = a + b;
            return true;
        }
        if (a > b) std::swap(a, b);
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        auto it = sum_memo_.find(key);
        long idx;
        if (it != sum_memo_.end()) {
            idx = it->second;
        } else {
            idx = grid_->round_up(grid_->scaled(a) + grid_->scaled(b));
            sum_memo_.emplace(key, idx);
        }
        if (idx < 0) return false;
        out = static_cast<std::uint32_t>(idx);
        return true;
    }

private:
    std::int64_t k_;
    const RoundingGrid* grid_ = nullptr;
    std::unordered_map<std::uint64_t, long> add_memo_, sum_memo_;
};

class SkeletonDP {
public:
    SkeletonDP(const Graph& g, const NiceTreeDecomposition& ntd, Arith arith, const DPOptions& opt)
        : g_(g), ntd_(ntd), arith_(std::move(arith)), opt_(opt) {}

    DPRun run() {
        DPRun out;
        int count = static_cast<int>(ntd_.nodes.size());
        std::vector<Table> tables(count);
        std::vector<int> consumers(count, 0);
        for (auto& nd : ntd_.nodes)
            for (int c : nd.children) ++consumers[c];
        if (opt_.validate) compute_processed();
        if (opt_.keep_tables) out.tables.resize(count);
        for (int t = 0; t < count; ++t) {
            auto& nd = ntd_.nodes[t];
            switch (nd.kind) {
            case NodeKind::Leaf:
                tables[t].insert(Canonical{{0, 0}, {}}, nullptr);
                break;
            case NodeKind::Forget:
                forget(tables[nd.children[0]], ntd_.nodes[nd.children[0]].bag, nd.vertex, nd.bag, tables[t]);
                break;
            case NodeKind::Introduce:
                introduce(tables[nd.children[0]], ntd_.nodes[nd.children[0]].bag, nd.vertex, nd.bag, tables[t]);
                break;
            case NodeKind::Join:
                join(tables[nd.children[0]], tables[nd.children[1]], tables[t]);
                break;
            }
            auto& tb = tables[t];
            out.stats.total_states += tb.entries.size();
            out.stats.max_table = std::max(out.stats.max_table, tb.entries.size());
            for (auto& e : tb.entries) {
                int V = e.code[0];
                out.stats.max_skeleton = std::max<std::size_t>(out.stats.max_skeleton, V);
                if (V > 2 * static_cast<int>(nd.bag.size()) + 1)
                    throw std::logic_error("skeleton exceeds 2|bag|+1 vertices");
                if (opt_.validate) validate(t, e);
            }
            if (opt_.keep_tables) {
                for (auto& e : tb.entries) {
                    auto len = shape_length(e.code);
                    out.tables[t].push_back(
                        {Code(e.code.begin(), e.code.begin() + len), Code(e.code.begin() + len, e.code.end())});
                }
            }
            for (int c : nd.children)
                if (--consumers[c] == 0) tables[c] = Table{};
        }
        auto& root = tables[ntd_.root];
        auto it = root.index.find(Code{0, 0});
        if (it != root.index.end()) out.tree = SpanningTree(g_, materialize(root.entries[it->second].forest));
        return out;
    }

private:
    static int position(const std::vector<int>& bag, int v) {
        auto it = std::lower_bound(bag.begin(), bag.end(), v);
        return (it != bag.end() && *it == v) ? static_cast<int>(it - bag.begin()) : -1;
    }

    void forget(const Table& child, const std::vector<int>& cbag, int v, const std::vector<int>& bag, Table& out) {
        int pv = position(cbag, v);
        std::vector<int> targets;
        for (int u : g_.neighbors(v))
            if (u != v && position(bag, u) >= 0) targets.push_back(position(cbag, u));
        for (auto& e : child.entries) {
            State s = decode(e.code);
            QuasiSkeleton q = to_quasi(s, cbag, e.anchors);
            bool future = false;
            for (int l : q.incident(pv))
                if (q.links[l].label == 1) future = true;
            if (future) continue;
            // Paths from v: parent pointers of a search rooted at v.
            std::vector<std::vector<std::pair<int, int>>> adj(q.nodes.size());
            for (int l = 0; l < static_cast<int>(q.links.size()); ++l) {
                adj[q.links[l].a].push_back({q.links[l].b, l});
                adj[q.links[l].b].push_back({q.links[l].a, l});
            }
            std::vector<int> up(q.nodes.size(), -2), uplink(q.nodes.size(), -1), order{pv};
            up[pv] = -1;
            for (std::size_t i = 0; i < order.size(); ++i)
                for (auto [y, l] : adj[order[i]])
                    if (up[y] == -2) {
                        up[y] = order[i];
                        uplink[y] = l;
                        order.push_back(y);
                    }
            std::vector<std::uint32_t> r(q.links.size(), 0);
            for (int pu : targets)
                for (int x = pu; x != pv; x = up[x]) ++r[uplink[x]];
            bool ok = true;
            for (std::size_t l = 0; l < q.links.size() && ok; ++l)
                if (r[l]) ok = arith_.add(q.links[l].c, r[l]);
            if (!ok) continue;
            q.nodes[pv].vertex = -1;
            q.nodes[pv].label = -1;
            q.nodes[pv].anchor = v;
            for (int l : q.incident(pv))
                if (q.links[l].label == 0) q.links[l].label = -1;
            simplify(q);
            out.insert(canonicalize(q, bag), e.forest);
        }
    }

    void introduce(const Table& child, const std::vector<int>& cbag, int v, const std::vector<int>& bag, Table& out) {
        auto adjacent = [&](const QuasiSkeleton& q, int node) {
            return q.nodes[node].vertex >= 0 && g_.has_edge(v, q.nodes[node].vertex);
        };
        for (auto& e : child.entries) {
            State s = decode(e.code);
            QuasiSkeleton base = to_quasi(s, cbag, e.anchors);

            auto emit = [&](const QuasiSkeleton& q, int vnode) {
                std::vector<Edge> fresh;
                for (int l : q.incident(vnode))
                    if (q.links[l].label == 0) {
                        int other = q.links[l].a == vnode ? q.links[l].b : q.links[l].a;
                        fresh.push_back(make_edge(v, q.nodes[other].vertex));
                    }
                Forest f = e.forest;
                if (!fresh.empty()) {
                    auto chunk = std::make_shared<ForestChunk>();
                    chunk->edges = std::move(fresh);
                    chunk->left = e.forest;
                    f = chunk;
                }
                out.insert(canonicalize(q, bag), std::move(f));
            };
            // Every subset of the given links flips from future to present.
            auto with_choices = [&](QuasiSkeleton q, int vnode, const std::vector<int>& choosable) {
                int d = static_cast<int>(choosable.size());
                for (int mask = 0; mask < (1 << d); ++mask) {
                    for (int i = 0; i < d; ++i) q.links[choosable[i]].label = (mask >> i & 1) ? 0 : 1;
                    emit(q, vnode);
                }
            };

            if (s.V == 0) {
                QuasiSkeleton q;
                int vn = q.add_node(v, 0);
                emit(q, vn);
                continue;
            }
            int nodes = static_cast<int>(base.nodes.size());
            int links = static_cast<int>(base.links.size());
            // v takes the place of an anonymous future node.
            for (int x = 0; x < nodes; ++x) {
                if (base.nodes[x].vertex >= 0 || base.nodes[x].label != 1) continue;
                QuasiSkeleton q = base;
                q.nodes[x].vertex = v;
                q.nodes[x].label = 0;
                std::vector<int> choosable;
                for (int l : q.incident(x)) {
                    int other = q.links[l].a == x ? q.links[l].b : q.links[l].a;
                    if (adjacent(q, other)) choosable.push_back(l);
                }
                with_choices(std::move(q), x, choosable);
            }
            // v subdivides a future edge.
            for (int l = 0; l < links; ++l) {
                if (base.links[l].label != 1) continue;
                QuasiSkeleton q = base;
                auto lk = q.links[l];
                q.links[l].alive = false;
                int vn = q.add_node(v, 0);
                int l1 = q.add_link(lk.a, vn, 1, lk.c);
                int l2 = q.add_link(vn, lk.b, 1, lk.c);
                std::vector<int> choosable;
                if (adjacent(q, lk.a)) choosable.push_back(l1);
                if (adjacent(q, lk.b)) choosable.push_back(l2);
                with_choices(std::move(q), vn, choosable);
            }
            // v hangs off a bag vertex.
            for (int u = 0; u < nodes; ++u) {
                if (base.nodes[u].vertex < 0) continue;
                QuasiSkeleton q = base;
                int vn = q.add_node(v, 0);
                int l = q.add_link(u, vn, 1, 0);
                emit(q, vn);
                if (adjacent(q, u)) {
                    q.links[l].label = 0;
                    emit(q, vn);
                }
            }
            // v hangs off an anonymous future node.
            for (int x = 0; x < nodes; ++x) {
                if (base.nodes[x].vertex >= 0 || base.nodes[x].label != 1) continue;
                QuasiSkeleton q = base;
                int vn = q.add_node(v, 0);
                q.add_link(x, vn, 1, 0);
                emit(q, vn);
            }
            // v hangs off a new anonymous future node splitting a future edge.
            for (int l = 0; l < links; ++l) {
                if (base.links[l].label != 1) continue;
                QuasiSkeleton q = base;
                auto lk = q.links[l];
                q.links[l].alive = false;
                int x = q.add_node(-1, 1);
                q.add_link(lk.a, x, 1, lk.c);
                q.add_link(x, lk.b, 1, lk.c);
                int vn = q.add_node(v, 0);
                q.add_link(x, vn, 1, 0);
                emit(q, vn);
            }
        }
    }

    static Code join_key(const Code& code) {
        int V = code[0];
        Code key(code.begin(), code.begin() + 1 + V);  // V, b, parents
        for (int i = 1; i < V; ++i) key.push_back(code[1 + V + i - 1] == 1 ? 1 : 0);  // zero-label pattern
        return key;
    }

    void join(const Table& left, const Table& right, Table& out) {
        std::unordered_map<Code, std::vector<int>, CodeHash> groups;
        for (int i = 0; i < static_cast<int>(right.entries.size()); ++i)
            groups[join_key(right.entries[i].code)].push_back(i);
        for (auto& a : left.entries) {
            auto it = groups.find(join_key(a.code));
            if (it == groups.end()) continue;
            State sa = decode(a.code);
            for (int bi : it->second) {
                auto& b = right.entries[bi];
                State sb = decode(b.code);
                State s = sa;
                std::vector<int> anchors = a.anchors;
                bool ok = true;
                auto compatible = [](int x, int y) { return (x == -1 && y == 1) || (x == 1 && y == -1) || (x == 1 && y == 1); };
                for (int i = s.b; i < s.V && ok; ++i) {
                    if (!compatible(sa.vl[i], sb.vl[i])) ok = false;
                    s.vl[i] = std::min(sa.vl[i], sb.vl[i]);
                    if (sb.vl[i] == -1) anchors[i] = b.anchors[i];
                }
                for (int i = 1; i < s.V && ok; ++i) {
                    if (sa.el[i] != 0 && !compatible(sa.el[i], sb.el[i])) ok = false;
                    s.el[i] = std::min(sa.el[i], sb.el[i]);
                    if (ok) ok = arith_.sum(sa.c[i], sb.c[i], s.c[i]);
                }
                if (!ok) continue;
                auto chunk = std::make_shared<ForestChunk>();
                chunk->left = a.forest;
                chunk->right = b.forest;
                out.insert(Canonical{encode(s), std::move(anchors)}, chunk);
            }
        }
    }

    void compute_processed() {
        processed_.assign(ntd_.nodes.size(), {});
        for (std::size_t t = 0; t < ntd_.nodes.size(); ++t) {
            std::set<int> acc(ntd_.nodes[t].bag.begin(), ntd_.nodes[t].bag.end());
            for (int c : ntd_.nodes[t].children) acc.insert(processed_[c].begin(), processed_[c].end());
            processed_[t].assign(acc.begin(), acc.end());
        }
    }

    // The seven consistent-solution properties, evaluated directly on the stored forest.
    void validate(int t, const Entry& e) {
        if (!arith_.exact()) return;
        auto fail = [&](const std::string& what) {
            throw std::logic_error("inconsistent entry at node " + std::to_string(t) + ": " + what);
        };
        const auto& bag = ntd_.nodes[t].bag;
        const auto& P = processed_[t];
        std::vector<int> idx(g_.n(), -1);
        for (int i = 0; i < static_cast<int>(P.size()); ++i) idx[P[i]] = i;
        auto in_bag = [&](int v) { return std::binary_search(bag.begin(), bag.end(), v); };
        auto forest = materialize(e.forest);
        State s = decode(e.code);

        // T' = F plus future edges; anonymous future nodes become extra vertices.
        int base = static_cast<int>(P.size());
        std::vector<int> tnode(s.V, -1);
        int extra = 0;
        for (int i = 0; i < s.V; ++i) {
            if (i < s.b) tnode[i] = idx[bag[i]];
            else if (s.vl[i] == -1) {
                if (e.anchors[i] < 0 || idx[e.anchors[i]] < 0) fail("past node without anchor");
                tnode[i] = idx[e.anchors[i]];
            } else tnode[i] = base + extra++;
        }
        int N = base + extra;
        if (N == 0) return;
        std::vector<Edge> tedges;
        for (auto [u, v] : forest) {
            if (idx[u] < 0 || idx[v] < 0 || !g_.has_edge(u, v)) fail("forest leaves the processed subgraph");
            tedges.push_back(make_edge(idx[u], idx[v]));
        }
        std::set<Edge> fset(tedges.begin(), tedges.end());
        std::vector<int> future_edge(s.V, -1);
        for (int i = 1; i < s.V; ++i) {
            Edge se = make_edge(tnode[i], tnode[s.parent[i]]);
            if (s.el[i] == 0 && !fset.count(se)) fail("present edge missing from forest");
            if (s.el[i] == 1) {
                future_edge[i] = static_cast<int>(tedges.size());
                tedges.push_back(se);
            }
        }
        if (static_cast<int>(tedges.size()) != N - 1) fail("forest plus future edges is not a tree (edge count)");
        std::vector<std::vector<std::pair<int, int>>> adj(N);
        for (int i = 0; i < static_cast<int>(tedges.size()); ++i) {
            adj[tedges[i].first].push_back({tedges[i].second, i});
            adj[tedges[i].second].push_back({tedges[i].first, i});
        }
        std::vector<int> par(N, -2), plink(N, -1), depth(N, 0), order{0};
        par[0] = -1;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (auto [y, l] : adj[order[i]])
                if (par[y] == -2) {
                    par[y] = order[i];
                    plink[y] = l;
                    depth[y] = depth[order[i]] + 1;
                    order.push_back(y);
                }
        if (static_cast<int>(order.size()) != N) fail("forest plus future edges is not connected");
        auto path = [&](int a, int b) {
            std::vector<int> out;
            while (a != b) {
                if (depth[a] < depth[b]) std::swap(a, b);
                out.push_back(plink[a]);
                a = par[a];
            }
            return out;
        };
        std::vector<std::int64_t> cong(tedges.size(), 0);
        for (auto [u, v] : g_.edges()) {
            if (idx[u] < 0 || idx[v] < 0 || (in_bag(u) && in_bag(v))) continue;
            for (int l : path(idx[u], idx[v])) ++cong[l];
        }
        for (auto c : cong)
            if (c > arith_.k()) fail("tree edge congestion above k");
        for (int i = 1; i < s.V; ++i) {
            int a = tnode[i], b = tnode[s.parent[i]];
            if (s.el[i] == 1) {
                if (cong[future_edge[i]] != s.c[i]) fail("future edge congestion mismatch");
            } else if (s.el[i] == 0) {
                auto p = path(a, b);
                if (p.size() != 1 || cong[p[0]] != s.c[i]) fail("present edge congestion mismatch");
            } else {
                auto p = path(a, b);
                std::int64_t mx = 0;
                for (int l : p) {
                    if (l >= static_cast<int>(forest.size())) fail("past path uses a future edge");
                    auto [x, y] = tedges[l];
                    if (in_bag(P[x]) && in_bag(P[y])) fail("past path uses a bag edge");
                    mx = std::max(mx, cong[l]);
                }
                if (mx != s.c[i]) fail("past edge congestion is not the path maximum");
            }
        }
    }

    const Graph& g_;
    const NiceTreeDecomposition& ntd_;
    Arith arith_;
    DPOptions opt_;
    std::vector<std::vector<int>> processed_;
};

void check_inputs(const Graph& g, const NiceTreeDecomposition& ntd) {
    if (g.n() == 0) throw InvalidInput("empty graph");
    if (!is_connected(g)) throw Disconnected();
    if (auto bad = validate_nice(g, ntd)) throw InvalidInput("invalid decomposition: " + *bad);
}

std::optional<SpanningTree> verified(const Graph& g, std::optional<SpanningTree> t, std::int64_t k) {
    if (t && congestion_report(g, *t).max_congestion > k)
        throw VerificationError("DP returned a tree above the target congestion");
    return t;
}

} // namespace

DPRun run_exact_dp(const Graph& g, std::int64_t k, const NiceTreeDecomposition& ntd, const DPOptions& opt) {
    check_inputs(g, ntd);
    if (k < 0) throw InvalidInput("k must be non-negative");
    SkeletonDP dp(g, ntd, Arith(k), opt);
    auto run = dp.run();
    run.tree = verified(g, std::move(run.tree), k);
    return run;
}

DPRun run_approx_dp(const Graph& g, const RoundingGrid& grid, const NiceTreeDecomposition& ntd, const DPOptions& opt) {
    check_inputs(g, ntd);
    DPOptions o = opt;
    o.validate = false;
    SkeletonDP dp(g, ntd, Arith(&grid), o);
    return dp.run();
}

std::optional<SpanningTree> solve_exact_tw(const Graph& g, std::int64_t k, const NiceTreeDecomposition& ntd) {
    return run_exact_dp(g, k, ntd).tree;
}

std::optional<SpanningTree> solve_exact_tw(const Graph& g, std::int64_t k) {
    return solve_exact_tw(g, k, nice_decomposition(g));
}

TwSolution solve_stc_tw(const Graph& g, const NiceTreeDecomposition& ntd) {
    check_inputs(g, ntd);
    if (g.n() == 1) return {0, SpanningTree(g, {})};
    for (std::int64_t k = 1; k <= g.m(); ++k)
        if (auto t = solve_exact_tw(g, k, ntd)) return {k, *t};
    throw VerificationError("no spanning tree found up to k = m");
}

TwSolution solve_stc_tw(const Graph& g) { return solve_stc_tw(g, nice_decomposition(g)); }

ApproxSolution solve_approx_tw(const Graph& g, Rational eps, const NiceTreeDecomposition& ntd) {
    check_inputs(g, ntd);
    eps = eps.reduced();
    if (eps.num <= 0) throw InvalidInput("epsilon must be positive");
    if (g.n() == 1) return {SpanningTree(g, {}), 0, 0};
    int h = std::max(ntd.height(), 1);
    for (std::int64_t k = 1; k <= g.m(); ++k) {
        RoundingGrid grid(eps, h, k);
        auto run = run_approx_dp(g, grid, ntd);
        if (!run.tree) continue;
        auto c = congestion_report(g, *run.tree).max_congestion;
        // c <= (1 + eps) k
        if (static_cast<__int128>(c) * eps.den > static_cast<__int128>(eps.den + eps.num) * k)
            throw VerificationError("rounded DP returned a tree above (1+eps)k");
        return {*run.tree, k, c};
    }
    throw VerificationError("rounded DP found no tree up to k = m");
}

ApproxSolution solve_approx_tw(const Graph& g, Rational eps) { return solve_approx_tw(g, eps, nice_decomposition(g)); }

ApproxAudit audit_approx_invariants(const Graph& g, Rational eps, std::int64_t k, const NiceTreeDecomposition& ntd) {
    ApproxAudit audit;
    eps = eps.reduced();
    DPOptions keep{false, true};
    int h = std::max(ntd.height(), 1);
    RoundingGrid grid(eps, h, k);
    std::int64_t k_loose = static_cast<std::int64_t>((static_cast<__int128>(eps.den + eps.num) * k) / eps.den);
    auto exact = run_exact_dp(g, k, ntd, keep);
    auto approx = run_approx_dp(g, grid, ntd, keep);
    auto loose = run_exact_dp(g, k_loose, ntd, keep);
    for (std::size_t t = 0; t < ntd.nodes.size(); ++t) {
        int ht = ntd.nodes[t].height;
        std::map<Code, std::vector<const Code*>> approx_by_shape, loose_by_shape;
        for (auto& s : approx.tables[t]) approx_by_shape[s.shape].push_back(&s.c);
        for (auto& s : loose.tables[t]) loose_by_shape[s.shape].push_back(&s.c);
        audit.exact_states += exact.tables[t].size();
        audit.approx_states += approx.tables[t].size();
        for (auto& s : exact.tables[t]) {
            bool found = false;
            auto it = approx_by_shape.find(s.shape);
            if (it != approx_by_shape.end())
                for (auto* ch : it->second) {
                    bool all = true;
                    for (std::size_t e = 0; e < s.c.size() && all; ++e)
                        all = grid.within_factor((*ch)[e], ht, s.c[e]);
                    if (all) {
                        found = true;
                        break;
                    }
                }
            if (!found) {
                audit.ok = false;
                audit.message = "node " + std::to_string(t) + ": exact state without a rounded counterpart";
                return audit;
            }
        }
        for (auto& s : approx.tables[t]) {
            bool found = false;
            auto it = loose_by_shape.find(s.shape);
            if (it != loose_by_shape.end())
                for (auto* c : it->second) {
                    bool all = true;
                    for (std::size_t e = 0; e < s.c.size() && all; ++e)
                        all = (*c)[e] <= grid.ceil_value(s.c[e]);
                    if (all) {
                        found = true;
                        break;
                    }
                }
            if (!found) {
                audit.ok = false;
                audit.message = "node " + std::to_string(t) + ": rounded state dominates no exact state";
                return audit;
            }
        }
    }
    return audit;
}

} // namespace stc
