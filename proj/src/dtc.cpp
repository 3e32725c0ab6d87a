#include "stc/dtc.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stc/congestion.hpp"
#include "stc/errors.hpp"

namespace stc {

namespace {

struct Split {
    std::vector<int> s, c;
    std::vector<char> in_s;
};

Split split_modulator(const Graph& g, const std::vector<int>& s) {
    Split out;
    out.in_s.assign(g.n(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw InvalidInput("modulator vertex out of range");
        if (out.in_s[v]) throw InvalidInput("modulator lists a vertex twice");
        out.in_s[v] = 1;
    }
    for (int v = 0; v < g.n(); ++v) (out.in_s[v] ? out.s : out.c).push_back(v);
    if (out.c.empty()) throw InvalidInput("modulator leaves no clique vertices");
    return out;
}

bool is_clique(const Graph& g, const std::vector<int>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!g.has_edge(c[i], c[j])) return false;
    return true;
}

struct Task {
    int r;
    std::vector<int> q;
};

struct Best {
    std::int64_t value = LLONG_MAX;
    std::vector<int> ids;
    std::uint64_t evaluated = 0;
};

std::vector<Task> make_tasks(const Graph& g, const Split& sp) {
    auto classes = twin_classes(g, sp.s, TwinMode::Closed);
    std::vector<int> roots = sp.s;
    for (const auto& cl : classes) roots.push_back(cl.front());
    const int q = static_cast<int>(sp.s.size());

    std::vector<Task> tasks;
    for (int r : roots) {
        std::vector<std::vector<int>> avail;
        for (const auto& cl : classes) {
            std::vector<int> m;
            for (int v : cl)
                if (v != r) m.push_back(v);
            avail.push_back(std::move(m));
        }
        std::vector<int> picked;
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i == avail.size()) {
                tasks.push_back({r, picked});
                return;
            }
            int top = std::min<int>(left, static_cast<int>(avail[i].size()));
            for (int cnt = 0; cnt <= top; ++cnt) {
                for (int j = 0; j < cnt; ++j) picked.push_back(avail[i][j]);
                rec(i + 1, left - cnt);
                picked.resize(picked.size() - cnt);
            }
        };
        rec(0, q);
    }
    return tasks;
}

void solve_task(const Graph& g, const Split& sp, const Task& task, Best& best) {
    const int r = task.r;
    std::vector<char> in_q(g.n(), 0);
    for (int v : task.q) in_q[v] = 1;

    std::vector<int> base;  // edge ids from r to the clique leaves
    for (int c : sp.c) {
        if (c == r || in_q[c]) continue;
        int id = g.edge_id(r, c);
        if (id < 0) return;
        base.push_back(id);
    }

    std::vector<int> x;
    for (int v : sp.s)
        if (v != r) x.push_back(v);
    for (int v : task.q) x.push_back(v);
    std::sort(x.begin(), x.end());

    std::vector<int> idx(g.n(), -1);
    for (std::size_t i = 0; i < x.size(); ++i) idx[x[i]] = static_cast<int>(i);
    // Candidate parents: G-neighbours inside X ∪ {r}.
    std::vector<std::vector<int>> cand(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (int p : g.neighbors(x[i]))
            if (p == r || idx[p] >= 0) cand[i].push_back(p);

    CongestionEvaluator ev(g);
    std::vector<int> parent(x.size(), -1);
    std::vector<int> ids = base;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == x.size()) {
            auto c = ev.max_congestion(ids);
            ++best.evaluated;
            if (c < best.value) {
                best.value = c;
                best.ids = ids;
            }
            return;
        }
        for (int p : cand[i]) {
            // Reject if the assigned ancestors of p lead back to x[i].
            int w = p;
            while (w != r && idx[w] < static_cast<int>(i)) w = parent[idx[w]];
            if (w == x[i]) continue;
            parent[i] = p;
            ids.push_back(g.edge_id(x[i], p));
            rec(i + 1);
            ids.pop_back();
        }
        parent[i] = -1;
    };
    rec(0);
}

} // namespace

bool dtc_is_small(std::int64_t n_clique, std::int64_t q) { return n_clique <= 2 * q * q * q + 4 * q; }

bool dtc_bound_satisfied(std::int64_t k, std::int64_t n_clique, std::int64_t q) {
    if (q == 0) return k <= n_clique - 1;
    return k * q < 2 * n_clique * q - n_clique + 2 * q * q * q;
}

DtcResult solve_dtc(const Graph& g, const std::vector<int>& s, const DtcOptions& opt) {
    if (g.n() == 0) throw InvalidInput("empty graph");
    if (!is_connected(g)) throw Disconnected();
    Split sp = split_modulator(g, s);
    if (!is_clique(g, sp.c)) throw InvalidInput("g minus the modulator is not a clique");

    DtcResult out;
    const auto q = static_cast<std::int64_t>(sp.s.size());
    const auto n_clique = static_cast<std::int64_t>(sp.c.size());
    if (g.n() == 1 || (!opt.force_enumeration && dtc_is_small(n_clique, q))) {
        auto o = stc_exact(g, opt.budget, opt.threads);
        out.k = o.k;
        out.tree = o.tree;
        out.small_case = true;
        out.candidates = o.trees_examined;
        return out;
    }

    auto tasks = make_tasks(g, sp);
    std::vector<Best> best(tasks.size());
#ifdef _OPENMP
    int nt = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (long t = 0; t < static_cast<long>(tasks.size()); ++t) solve_task(g, sp, tasks[t], best[t]);
#else
    for (std::size_t t = 0; t < tasks.size(); ++t) solve_task(g, sp, tasks[t], best[t]);
#endif
    std::size_t pick = 0;
    for (std::size_t t = 0; t < best.size(); ++t) {
        out.candidates += best[t].evaluated;
        if (best[t].value < best[pick].value) pick = t;
    }
    if (best.empty() || best[pick].value == LLONG_MAX)
        throw std::logic_error("distance-to-clique enumeration produced no spanning tree");
    std::vector<Edge> edges;
    for (int id : best[pick].ids) edges.push_back(g.edge(id));
    out.tree = SpanningTree(g, edges);
    out.k = congestion_report(g, out.tree).max_congestion;
    if (out.k != best[pick].value) throw VerificationError("distance-to-clique tree failed re-evaluation");
    return out;
}

SpanningTree dtc_bound_tree(const Graph& g, const std::vector<int>& s) {
    if (!is_connected(g)) throw Disconnected();
    Split sp = split_modulator(g, s);
    if (!is_clique(g, sp.c)) throw InvalidInput("g minus the modulator is not a clique");
    const auto q = static_cast<std::int64_t>(sp.s.size());
    const auto n_clique = static_cast<std::int64_t>(sp.c.size());

    std::vector<int> heavy;
    for (int v : sp.s) {
        std::int64_t cnt = 0;
        for (int u : g.neighbors(v)) cnt += !sp.in_s[u];
        if (cnt * q > n_clique * (q - 1)) heavy.push_back(v);
    }
    int r = -1;
    for (int c : sp.c) {
        if (std::all_of(heavy.begin(), heavy.end(), [&](int h) { return g.has_edge(c, h); })) {
            r = c;
            break;
        }
    }
    if (r < 0) throw std::logic_error("no hub vertex adjacent to every heavy modulator vertex");

    std::vector<char> in_s0(g.n(), 0);
    std::vector<Edge> edges;
    for (int u : g.neighbors(r)) {
        edges.push_back(make_edge(r, u));
        if (sp.in_s[u]) in_s0[u] = 1;
    }

    // Kuhn's augmenting paths from S \ S0 into C ∪ S0.
    std::vector<int> left;
    for (int v : sp.s)
        if (!in_s0[v]) left.push_back(v);
    std::vector<int> match_right(g.n(), -1), match_left(g.n(), -1);
    std::vector<char> visited;
    std::function<bool(int)> augment = [&](int v) {
        for (int u : g.neighbors(v)) {
            if (sp.in_s[u] && !in_s0[u]) continue;
            if (visited[u]) continue;
            visited[u] = 1;
            if (match_right[u] < 0 || augment(match_right[u])) {
                match_right[u] = v;
                match_left[v] = u;
                return true;
            }
        }
        return false;
    };
    for (int v : left) {
        visited.assign(g.n(), 0);
        augment(v);
    }

    std::vector<int> uf(g.n());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int v) { return uf[v] == v ? v : uf[v] = find(uf[v]); };
    for (auto [a, b] : edges) uf[find(a)] = find(b);
    std::vector<char> in_z(g.n(), 0);
    for (int v : left) {
        if (match_left[v] >= 0) {
            edges.push_back(make_edge(v, match_left[v]));
            uf[find(v)] = find(match_left[v]);
        } else {
            in_z[v] = 1;
        }
    }
    for (auto [a, b] : g.edges()) {
        if (!in_z[a] && !in_z[b]) continue;
        int ra = find(a), rb = find(b);
        if (ra == rb) continue;
        uf[ra] = rb;
        edges.push_back({a, b});
    }
    return SpanningTree(g, edges);
}

std::optional<std::vector<int>> find_clique_modulator(const Graph& g, int cap) {
    const int n = g.n();
    for (int size = 0; size <= std::min(cap, n - 1); ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<char> in(n, 0);
            for (int v : pick) in[v] = 1;
            std::vector<int> rest;
            for (int v = 0; v < n; ++v)
                if (!in[v]) rest.push_back(v);
            if (is_clique(g, rest)) return pick;
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace stc
