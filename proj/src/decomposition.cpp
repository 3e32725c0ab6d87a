#include "stc/decomposition.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "stc/errors.hpp"

namespace stc {

int TreeDecomposition::width() const {
    int w = 0;
    for (auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
    return w - 1;
}

int NiceTreeDecomposition::width() const {
    int w = 0;
    for (auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()));
    return w - 1;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    if (static_cast<int>(order.size()) != n) throw InvalidInput("elimination order must list every vertex");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) throw InvalidInput("bad elimination order");
        pos[order[i]] = i;
    }
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<int> parent(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> higher;
        for (int u : adj[v])
            if (pos[u] > i) higher.push_back(u);
        for (std::size_t a = 0; a < higher.size(); ++a)
            for (std::size_t b = a + 1; b < higher.size(); ++b) {
                adj[higher[a]].insert(higher[b]);
                adj[higher[b]].insert(higher[a]);
            }
        td.bags[i] = higher;
        td.bags[i].push_back(v);
        std::sort(td.bags[i].begin(), td.bags[i].end());
        int first = -1;
        for (int u : higher)
            if (first < 0 || pos[u] < first) first = pos[u];
        parent[i] = first;
    }
    int last_root = -1;
    for (int i = 0; i < n; ++i) {
        if (parent[i] >= 0) {
            td.tree.push_back({i, parent[i]});
        } else {
            if (last_root >= 0) td.tree.push_back({last_root, i});
            last_root = i;
        }
    }
    return td;
}

namespace {

std::vector<int> min_fill_order(const Graph& g) {
    int n = g.n();
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> done(n, false);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = LONG_MAX;
        int best_deg = INT_MAX;
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            long fill = 0;
            for (std::size_t a = 0; a < nb.size(); ++a)
                for (std::size_t b = a + 1; b < nb.size(); ++b)
                    if (!adj[nb[a]].count(nb[b])) ++fill;
            int deg = static_cast<int>(nb.size());
            if (fill < best_fill || (fill == best_fill && deg < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = deg;
            }
        }
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        for (int u : nb) adj[u].erase(best);
        adj[best].clear();
        done[best] = true;
        order.push_back(best);
    }
    return order;
}

// |Q(S, v)|: vertices outside S + v reachable from v through S.
int q_size(const Graph& g, unsigned s, int v) {
    unsigned seen = 1u << v, reached = 0;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x)) {
            unsigned bit = 1u << y;
            if (seen & bit) continue;
            seen |= bit;
            if (s & bit)
                stack.push_back(y);
            else
                reached |= bit;
        }
    }
    return __builtin_popcount(reached);
}

std::vector<int> exact_order(const Graph& g, int* width) {
    int n = g.n();
    if (n > 12) throw InvalidInput("exact decomposition is limited to 12 vertices");
    unsigned full = (1u << n) - 1;
    std::vector<int> tw(full + 1, INT_MAX), choice(full + 1, -1);
    tw[0] = -1;
    for (unsigned s = 1; s <= full; ++s) {
        for (int v = 0; v < n; ++v) {
            if (!(s >> v & 1)) continue;
            unsigned rest = s & ~(1u << v);
            int val = std::max(tw[rest], q_size(g, rest, v));
            if (val < tw[s]) {
                tw[s] = val;
                choice[s] = v;
            }
        }
    }
    std::vector<int> order;
    for (unsigned s = full; s; s &= ~(1u << choice[s])) order.push_back(choice[s]);
    std::reverse(order.begin(), order.end());
    if (width) *width = std::max(tw[full], 0);
    return order;
}

} // namespace

int treewidth_exact(const Graph& g) {
    int w = 0;
    exact_order(g, &w);
    return w;
}

TreeDecomposition decompose(const Graph& g, DecompositionMode mode) {
    if (g.n() == 0) throw InvalidInput("empty graph");
    if (!is_connected(g)) throw Disconnected();
    auto order = mode == DecompositionMode::ExactSmall ? exact_order(g, nullptr) : min_fill_order(g);
    return decomposition_from_order(g, order);
}

namespace {

std::vector<std::vector<int>> bag_tree(int count, const std::vector<Edge>& tree) {
    if (static_cast<int>(tree.size()) != std::max(count - 1, 0))
        throw InvalidInput("invalid decomposition: bag tree has wrong edge count");
    std::vector<std::vector<int>> adj(count);
    for (auto [a, b] : tree) {
        if (a < 0 || b < 0 || a >= count || b >= count || a == b)
            throw InvalidInput("invalid decomposition: bad bag-tree edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    if (count > 0) {
        std::vector<bool> seen(count, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != count) throw InvalidInput("invalid decomposition: bag tree is not connected");
    }
    return adj;
}

// Contract empty bags; no vertex can be shared across an empty bag, so reconnecting is safe.
TreeDecomposition drop_empty_bags(const TreeDecomposition& td) {
    auto adj = bag_tree(static_cast<int>(td.bags.size()), td.tree);
    std::vector<int> keep;
    std::vector<int> id(td.bags.size(), -1);
    for (std::size_t i = 0; i < td.bags.size(); ++i)
        if (!td.bags[i].empty()) {
            id[i] = static_cast<int>(keep.size());
            keep.push_back(static_cast<int>(i));
        }
    TreeDecomposition out;
    for (int i : keep) out.bags.push_back(td.bags[i]);
    if (keep.size() <= 1) return out;
    // Components of the kept bags after deleting empty ones, then chain them.
    std::vector<int> comp(td.bags.size(), -1);
    std::vector<int> reps;
    for (int s : keep) {
        if (comp[s] >= 0) continue;
        comp[s] = static_cast<int>(reps.size());
        reps.push_back(s);
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (id[y] >= 0 && comp[y] < 0) {
                    comp[y] = comp[s];
                    out.tree.push_back({id[x], id[y]});
                    stack.push_back(y);
                }
        }
    }
    for (std::size_t i = 1; i < reps.size(); ++i) out.tree.push_back({id[reps[i - 1]], id[reps[i]]});
    return out;
}

struct NiceBuilder {
    NiceTreeDecomposition out;

    int add(NodeKind kind, int vertex, std::vector<int> children, std::vector<int> bag) {
        NiceNode nd;
        nd.kind = kind;
        nd.vertex = vertex;
        nd.children = std::move(children);
        nd.bag = std::move(bag);
        for (int c : nd.children) nd.height = std::max(nd.height, out.nodes[c].height + 1);
        out.nodes.push_back(std::move(nd));
        return static_cast<int>(out.nodes.size()) - 1;
    }
    int introduce(int child, int v) {
        auto bag = out.nodes[child].bag;
        bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
        return add(NodeKind::Introduce, v, {child}, std::move(bag));
    }
    int forget(int child, int v) {
        auto bag = out.nodes[child].bag;
        bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
        return add(NodeKind::Forget, v, {child}, std::move(bag));
    }
    int transition(int cur, const std::vector<int>& target) {
        auto from = out.nodes[cur].bag;
        for (int v : from)
            if (!std::binary_search(target.begin(), target.end(), v)) cur = forget(cur, v);
        for (int v : target)
            if (!std::binary_search(from.begin(), from.end(), v)) cur = introduce(cur, v);
        return cur;
    }
};

} // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& input) {
    for (auto& b : input.bags)
        for (std::size_t i = 1; i < b.size(); ++i)
            if (b[i - 1] >= b[i]) throw InvalidInput("invalid decomposition: bags must be sorted sets");
    auto td = drop_empty_bags(input);
    auto adj = bag_tree(static_cast<int>(td.bags.size()), td.tree);
    NiceBuilder nb;
    if (td.bags.empty()) {
        nb.out.root = nb.add(NodeKind::Leaf, -1, {}, {});
        return std::move(nb.out);
    }
    std::function<int(int, int)> build = [&](int x, int parent) {
        std::vector<int> branches;
        for (int y : adj[x]) {
            if (y == parent) continue;
            branches.push_back(nb.transition(build(y, x), td.bags[x]));
        }
        if (branches.empty()) return nb.transition(nb.add(NodeKind::Leaf, -1, {}, {}), td.bags[x]);
        int cur = branches[0];
        for (std::size_t i = 1; i < branches.size(); ++i)
            cur = nb.add(NodeKind::Join, -1, {cur, branches[i]}, td.bags[x]);
        return cur;
    };
    int top = nb.transition(build(0, -1), {});
    nb.out.root = top;
    return std::move(nb.out);
}

NiceTreeDecomposition nice_decomposition(const Graph& g, DecompositionMode mode) {
    return make_nice(decompose(g, mode));
}

TreeDecomposition as_tree_decomposition(const NiceTreeDecomposition& ntd) {
    TreeDecomposition td;
    for (auto& nd : ntd.nodes) td.bags.push_back(nd.bag);
    for (int i = 0; i < static_cast<int>(ntd.nodes.size()); ++i)
        for (int c : ntd.nodes[i].children) td.tree.push_back({c, i});
    return td;
}

std::optional<std::string> validate_td(const Graph& g, const TreeDecomposition& td) {
    int count = static_cast<int>(td.bags.size());
    if (g.n() > 0 && count == 0) return "vertex-coverage violation: no bags";
    std::vector<std::vector<int>> adj;
    try {
        adj = bag_tree(count, td.tree);
    } catch (const InvalidInput& e) {
        return std::string("tree violation: ") + e.what();
    }
    std::vector<std::vector<int>> where(g.n());
    for (int i = 0; i < count; ++i)
        for (int v : td.bags[i]) {
            if (v < 0 || v >= g.n()) return "bag " + std::to_string(i + 1) + " names an unknown vertex";
            where[v].push_back(i);
        }
    for (int v = 0; v < g.n(); ++v)
        if (where[v].empty()) return "vertex-coverage violation: vertex " + std::to_string(v + 1);
    std::vector<char> has(count, 0);
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (int i : where[u])
            if (std::find(td.bags[i].begin(), td.bags[i].end(), v) != td.bags[i].end()) {
                ok = true;
                break;
            }
        if (!ok) return "edge-coverage violation: edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1);
    }
    for (int v = 0; v < g.n(); ++v) {
        std::fill(has.begin(), has.end(), 0);
        for (int i : where[v]) has[i] = 1;
        std::vector<int> stack{where[v][0]};
        std::vector<char> seen(count, 0);
        seen[where[v][0]] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (has[y] && !seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != where[v].size()) return "connectivity violation: vertex " + std::to_string(v + 1);
    }
    return std::nullopt;
}

std::optional<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
    if (auto bad = validate_td(g, as_tree_decomposition(ntd))) return bad;
    int count = static_cast<int>(ntd.nodes.size());
    if (ntd.root != count - 1) return "root must be the last node";
    if (!ntd.nodes[ntd.root].bag.empty()) return "root bag is not empty";
    for (int i = 0; i < count; ++i) {
        auto& nd = ntd.nodes[i];
        std::string at = "node " + std::to_string(i) + ": ";
        int h = 0;
        for (int c : nd.children) {
            if (c >= i) return at + "child id not smaller than parent";
            h = std::max(h, ntd.nodes[c].height + 1);
        }
        if (h != nd.height) return at + "height mismatch";
        switch (nd.kind) {
        case NodeKind::Leaf:
            if (!nd.children.empty() || !nd.bag.empty()) return at + "leaf must be childless with an empty bag";
            break;
        case NodeKind::Introduce: {
            if (nd.children.size() != 1) return at + "introduce needs one child";
            auto bag = ntd.nodes[nd.children[0]].bag;
            if (std::binary_search(bag.begin(), bag.end(), nd.vertex)) return at + "introduced vertex already present";
            bag.insert(std::lower_bound(bag.begin(), bag.end(), nd.vertex), nd.vertex);
            if (bag != nd.bag) return at + "introduce bag mismatch";
            break;
        }
        case NodeKind::Forget: {
            if (nd.children.size() != 1) return at + "forget needs one child";
            auto bag = ntd.nodes[nd.children[0]].bag;
            auto it = std::lower_bound(bag.begin(), bag.end(), nd.vertex);
            if (it == bag.end() || *it != nd.vertex) return at + "forgotten vertex absent from child";
            bag.erase(it);
            if (bag != nd.bag) return at + "forget bag mismatch";
            break;
        }
        case NodeKind::Join:
            if (nd.children.size() != 2) return at + "join needs two children";
            for (int c : nd.children)
                if (ntd.nodes[c].bag != nd.bag) return at + "join child bag differs";
            break;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

long parse_long(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + s + "'");
    }
}

} // namespace

TreeDecomposition parse_td(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long bags = -1, max_bag = 0, vertices = 0;
    TreeDecomposition td;
    std::vector<bool> defined;
    while (std::getline(in, line)) {
        ++line_no;
        auto t = split(line);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "s") {
            if (bags >= 0) throw ParseError(line_no, "duplicate header");
            if (t.size() != 5 || t[1] != "td") throw ParseError(line_no, "header must be 's td <bags> <max> <n>'");
            bags = parse_long(t[2], line_no);
            max_bag = parse_long(t[3], line_no);
            vertices = parse_long(t[4], line_no);
            if (bags < 0 || max_bag < 0 || vertices < 0) throw ParseError(line_no, "negative count");
            if (n >= 0 && vertices != n)
                throw ParseError(line_no, "decomposition is for " + std::to_string(vertices) + " vertices, graph has " +
                                              std::to_string(n));
            td.bags.assign(bags, {});
            defined.assign(bags, false);
            continue;
        }
        if (bags < 0) throw ParseError(line_no, "content before header");
        if (t[0] == "b") {
            if (t.size() < 2) throw ParseError(line_no, "bag line needs an id");
            long id = parse_long(t[1], line_no);
            if (id < 1 || id > bags) throw ParseError(line_no, "bag id out of range");
            if (defined[id - 1]) throw ParseError(line_no, "bag defined twice");
            defined[id - 1] = true;
            for (std::size_t i = 2; i < t.size(); ++i) {
                long v = parse_long(t[i], line_no);
                if (v < 1 || v > vertices) throw ParseError(line_no, "vertex out of range");
                td.bags[id - 1].push_back(static_cast<int>(v - 1));
            }
            auto& b = td.bags[id - 1];
            std::sort(b.begin(), b.end());
            if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw ParseError(line_no, "repeated vertex in bag");
            if (static_cast<long>(b.size()) > max_bag) throw ParseError(line_no, "bag larger than declared maximum");
            continue;
        }
        if (t.size() != 2) throw ParseError(line_no, "expected bag-tree edge 'i j'");
        long a = parse_long(t[0], line_no), b = parse_long(t[1], line_no);
        if (a < 1 || b < 1 || a > bags || b > bags) throw ParseError(line_no, "bag-tree edge out of range");
        td.tree.push_back({static_cast<int>(a - 1), static_cast<int>(b - 1)});
    }
    if (bags < 0) throw ParseError(line_no, "missing header");
    for (long i = 0; i < bags; ++i)
        if (!defined[i]) throw ParseError(line_no, "bag " + std::to_string(i + 1) + " never defined");
    return td;
}

std::string write_td(const TreeDecomposition& td, int n) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : td.tree) out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

} // namespace stc
