#include "stc/vi.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stc/congestion.hpp"
#include "stc/decomposition.hpp"
#include "stc/errors.hpp"
#include "stc/ilp.hpp"
#include "stc/tw_dp.hpp"

namespace stc {

namespace {

std::vector<int> checked_set(const Graph& g, const std::vector<int>& s) {
    std::vector<int> out = s;
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw InvalidInput("vertex set repeats a vertex");
    for (int v : out)
        if (v < 0 || v >= g.n()) throw InvalidInput("vertex set entry out of range");
    return out;
}

using Code = std::vector<std::uint64_t>;

Code type_code(const Graph& g, const std::vector<int>& perm, const std::vector<int>& s_index) {
    Code code;
    for (int v : perm) {
        std::uint64_t m = 0;
        for (int u : g.neighbors(v))
            if (s_index[u] >= 0) m |= std::uint64_t{1} << s_index[u];
        code.push_back(m);
    }
    std::uint64_t bits = 0;
    int b = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j, ++b)
            if (g.has_edge(perm[i], perm[j])) bits |= std::uint64_t{1} << b;
    code.push_back(bits);
    return code;
}

using PatternKey = std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>;

PatternKey image(const std::vector<int>& sigma, const ForestPattern& p) {
    PatternKey k;
    for (auto [i, j] : p.internal) {
        int a = sigma[i], c = sigma[j];
        k.first.emplace_back(std::min(a, c), std::max(a, c));
    }
    for (auto [i, s] : p.attach) k.second.emplace_back(sigma[i], s);
    std::sort(k.first.begin(), k.first.end());
    std::sort(k.second.begin(), k.second.end());
    return k;
}

std::vector<ForestPattern> forest_patterns(const ComponentType& t, int q) {
    const int c = t.size;
    std::vector<std::pair<int, int>> internal, attach;
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j)
            if (t.adj[i][j]) internal.emplace_back(i, j);
    for (int i = 0; i < c; ++i)
        for (int s = 0; s < q; ++s)
            if (t.s_mask[i] >> s & 1) attach.emplace_back(i, s);
    const int e = static_cast<int>(internal.size() + attach.size());
    if (e > 24) throw InvalidInput("component has too many edges for forest-type enumeration");

    std::set<PatternKey> seen;
    std::vector<int> uf(c + q), piece(c);
    std::function<int(std::vector<int>&, int)> find = [&](std::vector<int>& f, int v) {
        while (f[v] != v) v = f[v] = f[f[v]];
        return v;
    };
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e); ++mask) {
        std::iota(uf.begin(), uf.end(), 0);
        std::iota(piece.begin(), piece.end(), 0);
        bool ok = true;
        ForestPattern p;
        for (int b = 0; b < e && ok; ++b) {
            if (!(mask >> b & 1)) continue;
            int x, y;
            if (b < static_cast<int>(internal.size())) {
                std::tie(x, y) = internal[b];
                p.internal.push_back(internal[b]);
                piece[find(piece, x)] = find(piece, y);
            } else {
                auto [i, s] = attach[b - internal.size()];
                x = i;
                y = c + s;
                p.attach.push_back({i, s});
            }
            int rx = find(uf, x), ry = find(uf, y);
            if (rx == ry) ok = false;
            uf[rx] = ry;
        }
        if (!ok) continue;
        std::vector<int> attach_count(c, 0);
        for (auto [i, s] : p.attach) ++attach_count[find(piece, i)];
        bool leaf = true;
        for (int i = 0; i < c && ok; ++i) {
            if (find(piece, i) != i) continue;
            if (attach_count[i] == 0) ok = false;
            if (attach_count[i] != 1) leaf = false;
        }
        if (!ok) continue;
        p.leaf = leaf;
        PatternKey best = image(t.automorphisms[0], p);
        for (const auto& sigma : t.automorphisms) best = std::min(best, image(sigma, p));
        seen.insert(best);
    }
    std::vector<ForestPattern> out;
    for (const auto& k : seen) {
        ForestPattern p{k.first, k.second, false};
        // Recompute the leaf flag on the canonical representative.
        std::vector<int> pc(c);
        std::iota(pc.begin(), pc.end(), 0);
        for (auto [i, j] : p.internal) pc[find(pc, i)] = find(pc, j);
        std::vector<int> cnt(c, 0);
        for (auto [i, s] : p.attach) ++cnt[find(pc, i)];
        p.leaf = true;
        for (int i = 0; i < c; ++i)
            if (find(pc, i) == i && cnt[i] != 1) p.leaf = false;
        out.push_back(std::move(p));
    }
    return out;
}

// Tree edges of one pattern realised on a concrete component.
void append_pattern(const ForestPattern& p, const std::vector<int>& member, const std::vector<int>& s,
                    std::vector<Edge>& out) {
    for (auto [i, j] : p.internal) out.push_back(make_edge(member[i], member[j]));
    for (auto [i, si] : p.attach) out.push_back(make_edge(member[i], s[si]));
}

struct Guess {
    std::vector<int> chosen;  // per class, how many members (from the front) belong to H
    std::vector<int> h;       // sorted vertices of H
};

struct Task {
    int guess;
    std::vector<Edge> t_h;  // host ids
};

struct TaskResult {
    std::int64_t value = LLONG_MAX;
    std::vector<std::vector<std::int64_t>> counts;  // per class, per pattern
    bool solved = false;
};

TaskResult solve_task(const Graph& g, const TypeCatalog& cat, const Guess& guess, const std::vector<Edge>& t_h) {
    TaskResult res;
    Graph h = induced_subgraph(g, guess.h);
    std::vector<int> local(g.n(), -1);
    for (std::size_t i = 0; i < guess.h.size(); ++i) local[guess.h[i]] = static_cast<int>(i);
    std::vector<Edge> th_local;
    for (auto [u, v] : t_h) th_local.push_back(make_edge(local[u], local[v]));
    std::vector<std::int64_t> a;
    if (!th_local.empty()) a = congestion_report(h, SpanningTree(h, th_local)).per_edge;
    // per_edge is aligned with the sorted tree edges.
    std::vector<Edge> rows = th_local;
    std::sort(rows.begin(), rows.end());

    MinMaxIlp ilp;
    ilp.a = a;
    ilp.b.assign(rows.size(), {});
    struct Var {
        int cls, pattern;
    };
    std::vector<Var> vars;
    for (std::size_t ci = 0; ci < cat.classes.size(); ++ci) {
        const auto& cls = cat.classes[ci];
        int left = static_cast<int>(cls.members.size()) - guess.chosen[ci];
        ilp.class_total.push_back(left);
        if (left == 0) continue;
        const auto& rep = cls.members[guess.chosen[ci]];
        std::vector<int> verts = guess.h;
        verts.insert(verts.end(), rep.begin(), rep.end());
        std::vector<int> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        Graph lg = induced_subgraph(g, sorted);
        std::vector<int> lid(g.n(), -1);
        for (std::size_t i = 0; i < sorted.size(); ++i) lid[sorted[i]] = static_cast<int>(i);
        const auto& pats = cat.patterns[cls.type];
        for (std::size_t pj = 0; pj < pats.size(); ++pj) {
            if (!pats[pj].leaf) continue;
            std::vector<Edge> host_edges = t_h, pe;
            append_pattern(pats[pj], rep, cat.s, pe);
            host_edges.insert(host_edges.end(), pe.begin(), pe.end());
            std::vector<Edge> le;
            for (auto [u, v] : host_edges) le.push_back(make_edge(lid[u], lid[v]));
            auto rep_cong = congestion_report(lg, SpanningTree(lg, le));
            for (std::size_t r = 0; r < rows.size(); ++r) {
                auto [u, v] = rows[r];
                std::int64_t c = rep_cong.at(lid[guess.h[u]], lid[guess.h[v]]);
                ilp.b[r].push_back(c - a[r]);
            }
            std::int64_t fl = 0;
            for (auto [u, v] : pe) fl = std::max(fl, rep_cong.at(lid[u], lid[v]));
            ilp.floor.push_back(fl);
            ilp.var_class.push_back(static_cast<int>(ci));
            vars.push_back({static_cast<int>(ci), static_cast<int>(pj)});
        }
    }
    auto sol = ilp_minimize_max(ilp);
    if (!sol) return res;
    res.solved = true;
    res.value = sol->objective;
    res.counts.resize(cat.classes.size());
    for (std::size_t ci = 0; ci < cat.classes.size(); ++ci)
        res.counts[ci].assign(cat.patterns[cat.classes[ci].type].size(), 0);
    for (std::size_t j = 0; j < vars.size(); ++j) res.counts[vars[j].cls][vars[j].pattern] = sol->x[j];
    return res;
}

} // namespace

TypeCatalog enumerate_types(const Graph& g, const std::vector<int>& s_in, int max_component) {
    TypeCatalog cat;
    cat.s = checked_set(g, s_in);
    if (cat.s.size() > 63) throw InvalidInput("vertex set too large for type enumeration");
    const int q = static_cast<int>(cat.s.size());
    std::vector<int> s_index(g.n(), -1);
    std::vector<bool> removed(g.n(), false);
    for (int i = 0; i < q; ++i) {
        s_index[cat.s[i]] = i;
        removed[cat.s[i]] = true;
    }
    std::map<Code, int> type_of;
    for (const auto& comp : components(g, removed)) {
        if (static_cast<int>(comp.size()) > max_component)
            throw InvalidInput("component of size " + std::to_string(comp.size()) + " exceeds the cap of " +
                               std::to_string(max_component));
        std::vector<int> perm = comp, best_perm = comp;
        Code best = type_code(g, perm, s_index);
        while (std::next_permutation(perm.begin(), perm.end())) {
            Code c = type_code(g, perm, s_index);
            if (c < best) {
                best = std::move(c);
                best_perm = perm;
            }
        }
        best.insert(best.begin(), comp.size());
        auto [it, fresh] = type_of.emplace(best, static_cast<int>(cat.types.size()));
        if (fresh) {
            ComponentType t;
            t.size = static_cast<int>(comp.size());
            t.adj.assign(t.size, std::vector<char>(t.size, 0));
            for (int i = 0; i < t.size; ++i) {
                std::uint64_t m = 0;
                for (int u : g.neighbors(best_perm[i]))
                    if (s_index[u] >= 0) m |= std::uint64_t{1} << s_index[u];
                t.s_mask.push_back(m);
                for (int j = 0; j < t.size; ++j) t.adj[i][j] = g.has_edge(best_perm[i], best_perm[j]);
            }
            std::vector<int> sigma(t.size);
            std::iota(sigma.begin(), sigma.end(), 0);
            do {
                bool ok = true;
                for (int i = 0; i < t.size && ok; ++i) {
                    if (t.s_mask[sigma[i]] != t.s_mask[i]) ok = false;
                    for (int j = 0; j < t.size && ok; ++j)
                        if (t.adj[sigma[i]][sigma[j]] != t.adj[i][j]) ok = false;
                }
                if (ok) t.automorphisms.push_back(sigma);
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            cat.types.push_back(std::move(t));
            cat.classes.push_back({it->second, {}});
        }
        cat.classes[it->second].members.push_back(best_perm);
    }
    for (const auto& t : cat.types) cat.patterns.push_back(forest_patterns(t, q));
    return cat;
}

SpanningTree tree_from_signature(const Graph& g, const TypeCatalog& cat, const std::vector<Edge>& t_h,
                                 const std::vector<std::vector<std::int64_t>>& counts,
                                 const std::vector<std::vector<int>>& order) {
    std::vector<Edge> edges = t_h;
    for (std::size_t ci = 0; ci < cat.classes.size(); ++ci) {
        const auto& cls = cat.classes[ci];
        const auto& pats = cat.patterns[cls.type];
        std::size_t pos = 0;
        for (std::size_t pj = 0; pj < counts[ci].size(); ++pj) {
            for (std::int64_t r = 0; r < counts[ci][pj]; ++r, ++pos) {
                if (pos >= order[ci].size()) throw InvalidInput("signature counts exceed the class size");
                append_pattern(pats[pj], cls.members.at(order[ci][pos]), cat.s, edges);
            }
        }
        if (pos != order[ci].size()) throw InvalidInput("signature counts do not cover the class");
    }
    return SpanningTree(g, edges);
}

VIResult solve_vi(const Graph& g, const std::vector<int>& s_in, const VIOptions& opt) {
    if (g.n() == 0) throw InvalidInput("empty graph");
    if (!is_connected(g)) throw Disconnected();
    VIResult out;
    auto s = checked_set(g, s_in);
    if (s.empty() || g.n() == 1) {
        auto o = stc_exact(g, opt.budget, opt.threads);
        out.k = o.k;
        out.tree = o.tree;
        return out;
    }
    TypeCatalog cat = enumerate_types(g, s, opt.max_component);

    if (opt.precheck) {
        int largest = 0;
        for (const auto& cls : cat.classes) largest = std::max(largest, cat.types[cls.type].size);
        std::int64_t kvi = static_cast<std::int64_t>(s.size()) + largest;
        auto ntd = nice_decomposition(g);
        for (std::int64_t k = 1; k < kvi * kvi; ++k) {
            if (auto t = solve_exact_tw(g, k, ntd)) {
                out.k = congestion_report(g, *t).max_congestion;
                out.tree = *t;
                out.precheck_hit = true;
                return out;
            }
        }
    }

    // Non-leaf choices: class counts with total at most |S| - 1, in lexicographic order.
    std::vector<Guess> guesses;
    {
        std::vector<int> chosen(cat.classes.size(), 0);
        int budget = static_cast<int>(s.size()) - 1;
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i == chosen.size()) {
                Guess gs{chosen, s};
                for (std::size_t ci = 0; ci < chosen.size(); ++ci)
                    for (int r = 0; r < chosen[ci]; ++r)
                        for (int v : cat.classes[ci].members[r]) gs.h.push_back(v);
                std::sort(gs.h.begin(), gs.h.end());
                if (is_connected(induced_subgraph(g, gs.h))) guesses.push_back(std::move(gs));
                return;
            }
            int top = std::min<int>(left, static_cast<int>(cat.classes[i].members.size()));
            for (int c = 0; c <= top; ++c) {
                chosen[i] = c;
                rec(i + 1, left - c);
            }
            chosen[i] = 0;
        };
        rec(0, budget);
    }

    std::vector<Task> tasks;
    for (std::size_t gi = 0; gi < guesses.size(); ++gi) {
        const auto& hv = guesses[gi].h;
        Graph h = induced_subgraph(g, hv);
        if (h.n() == 1) {
            tasks.push_back({static_cast<int>(gi), {}});
            continue;
        }
        enumerate_spanning_trees(h, opt.budget, [&](const std::vector<int>& ids) {
            Task t{static_cast<int>(gi), {}};
            for (int id : ids) t.t_h.push_back(make_edge(hv[h.edge(id).first], hv[h.edge(id).second]));
            tasks.push_back(std::move(t));
            return true;
        });
    }
    out.guesses = tasks.size();

    std::vector<TaskResult> results(tasks.size());
#ifdef _OPENMP
    int nt = opt.threads > 0 ? opt.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (long t = 0; t < static_cast<long>(tasks.size()); ++t)
        results[t] = solve_task(g, cat, guesses[tasks[t].guess], tasks[t].t_h);
#else
    for (std::size_t t = 0; t < tasks.size(); ++t) results[t] = solve_task(g, cat, guesses[tasks[t].guess], tasks[t].t_h);
#endif

    long pick = -1;
    for (std::size_t t = 0; t < results.size(); ++t) {
        if (!results[t].solved) continue;
        ++out.ilp_solves;
        if (pick < 0 || results[t].value < results[pick].value) pick = static_cast<long>(t);
    }
    if (pick < 0) throw std::logic_error("vertex-integrity search found no spanning tree");

    const Guess& gs = guesses[tasks[pick].guess];
    std::vector<std::vector<int>> order(cat.classes.size());
    for (std::size_t ci = 0; ci < cat.classes.size(); ++ci)
        for (int r = gs.chosen[ci]; r < static_cast<int>(cat.classes[ci].members.size()); ++r) order[ci].push_back(r);
    out.tree = tree_from_signature(g, cat, tasks[pick].t_h, results[pick].counts, order);
    out.k = congestion_report(g, out.tree).max_congestion;
    if (out.k != results[pick].value) throw VerificationError("vertex-integrity tree failed re-evaluation");
    for (const auto& row : results[pick].counts) out.signature.insert(out.signature.end(), row.begin(), row.end());
    return out;
}

std::optional<VertexIntegrity> vertex_integrity_set(const Graph& g, int cap) {
    const int n = g.n();
    std::optional<VertexIntegrity> best;
    for (int size = 0; size <= std::min(cap, n); ++size) {
        if (best && size >= best->value) break;
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<bool> removed(n, false);
            for (int v : pick) removed[v] = true;
            int largest = 0;
            for (const auto& c : components(g, removed)) largest = std::max<int>(largest, static_cast<int>(c.size()));
            int value = size + largest;
            if (value <= cap && (!best || value < best->value)) best = VertexIntegrity{pick, value};
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return best;
}

} // namespace stc
