#include "stc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "stc/errors.hpp"

namespace stc {

namespace {

std::vector<int> range(int from, int count) {
    std::vector<int> v(count);
    std::iota(v.begin(), v.end(), from);
    return v;
}

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

void add_clique(DoubleWeightedGraph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j], 1, 1);
}

const std::vector<int>& item_vertices(const InstanceBundle& b, std::size_t item) {
    return b.groups.at(idx("V", static_cast<int>(item) + 1));
}

void check_assignment(const std::vector<int>& assignment, std::size_t items, int bins) {
    if (assignment.size() != items) throw InvalidInput("assignment must list one bin per item");
    for (int x : assignment)
        if (x < 0 || x >= bins) throw InvalidInput("assignment uses a bin out of range");
}

} // namespace

InstanceBundle gen_ubp(int t, const std::vector<int>& a, UbpFamily family) {
    if (t < 3) throw InvalidInput("unary bin packing needs t >= 3");
    if (a.empty()) throw InvalidInput("no items");
    std::int64_t sum = 0;
    for (int x : a) {
        if (x < 1) throw InvalidInput("item sizes must be positive");
        sum += x;
    }
    if (sum % t != 0) throw InvalidInput("item sizes must sum to a multiple of t");
    const std::int64_t bsize = sum / t;

    InstanceBundle b;
    b.construction = "ubp";
    b.parameters = {{"t", t}, {"B", bsize}, {"n", static_cast<std::int64_t>(a.size())},
                    {"family_cliques", family == UbpFamily::Cliques}};
    const int total = static_cast<int>(sum) + t + 1;
    b.weighted = DoubleWeightedGraph(Graph(total));
    std::vector<int> all_items;
    int next = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto vs = range(next, a[i]);
        next += a[i];
        if (family == UbpFamily::Cliques) {
            add_clique(b.weighted, vs);
        } else {
            for (std::size_t j = 1; j < vs.size(); ++j) b.weighted.add_edge(vs[0], vs[j], 1, 1);
        }
        all_items.insert(all_items.end(), vs.begin(), vs.end());
        b.groups[idx("V", static_cast<int>(i) + 1)] = std::move(vs);
    }
    auto q = range(next, t);
    const int r = next + t;
    for (int v : q)
        for (int u : all_items) b.weighted.add_edge(std::min(u, v), std::max(u, v), 1, 1);
    const std::int64_t hub = 3 * (t - 1) * bsize;
    for (int v : q) b.weighted.add_edge(v, r, hub, hub);
    b.groups["Q"] = q;
    b.groups["r"] = {r};
    b.k = 5 * (t - 1) * bsize;
    b.parameters["hub_weight"] = hub;
    b.expansion = expand_single_weighted(b.weighted);
    b.graph = b.expansion->graph;
    return b;
}

InstanceBundle gen_3partition(const std::vector<int>& a, int bsize) {
    if (a.size() % 3 != 0 || a.empty()) throw InvalidInput("3-partition needs 3n items");
    const int n = static_cast<int>(a.size() / 3);
    if (n < 3) throw InvalidInput("3-partition needs n >= 3");
    std::int64_t sum = 0;
    for (int x : a) {
        if (4 * x <= bsize || 2 * x >= bsize) throw InvalidInput("item sizes must lie strictly between B/4 and B/2");
        sum += x;
    }
    if (sum != static_cast<std::int64_t>(n) * bsize) throw InvalidInput("item sizes must sum to nB");
    const int m_clique = 4 * (n - 1) * bsize;

    InstanceBundle b;
    b.construction = "3partition";
    b.parameters = {{"n", n}, {"B", bsize}, {"M", m_clique}};
    const int total = static_cast<int>(sum) + n + m_clique + 1;
    b.weighted = DoubleWeightedGraph(Graph(total));
    std::vector<int> all_items;
    int next = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto vs = range(next, a[i]);
        next += a[i];
        add_clique(b.weighted, vs);
        all_items.insert(all_items.end(), vs.begin(), vs.end());
        b.groups[idx("V", static_cast<int>(i) + 1)] = std::move(vs);
    }
    auto q = range(next, n);
    next += n;
    auto c = range(next, m_clique);
    next += m_clique;
    const int w = next;
    for (int v : q)
        for (int u : all_items) b.weighted.add_edge(u, v, 1, 1);
    add_clique(b.weighted, c);
    for (int u : c)
        for (int v : q) b.weighted.add_edge(v, u, 1, 1);
    for (int u : c) b.weighted.add_edge(u, w, 1, 1);
    b.groups["Q"] = q;
    b.groups["C"] = c;
    b.groups["w"] = {w};
    b.groups["items"] = all_items;
    b.k = m_clique + 2 * (n - 1) * bsize;
    b.graph = b.weighted.graph;
    return b;
}

std::vector<Clause> example_bsat_formula() { return {{1, -2, 3}, {1, 2, -3}, {-1, -2, 3}, {-1, 2, -3}}; }

InstanceBundle gen_bsat(const std::vector<Clause>& formula) {
    const int m = static_cast<int>(formula.size());
    if (m < 3) throw InvalidInput("(3,B2)-SAT instances need at least 3 clauses");
    int n = 0;
    for (const auto& cl : formula) {
        if (cl.size() != 3) throw InvalidInput("every clause needs exactly three literals");
        std::set<int> vars;
        for (int lit : cl) {
            if (lit == 0) throw InvalidInput("literal 0 is not allowed");
            vars.insert(std::abs(lit));
            n = std::max(n, std::abs(lit));
        }
        if (vars.size() != 3) throw InvalidInput("clause literals must use three different variables");
    }
    std::vector<int> pos(n + 1, 0), neg(n + 1, 0);
    for (const auto& cl : formula)
        for (int lit : cl) ++(lit > 0 ? pos : neg)[std::abs(lit)];
    for (int i = 1; i <= n; ++i)
        if (pos[i] != 2 || neg[i] != 2)
            throw InvalidInput("variable " + std::to_string(i) + " must occur exactly twice positively and twice negatively");

    InstanceBundle b;
    b.construction = "bsat";
    b.k = 2 * m + 3;
    const std::int64_t k = b.k;
    b.parameters = {{"n", n}, {"m", m}};
    b.weighted = DoubleWeightedGraph(Graph(4 * n + m));
    auto x = [](int i) { return 4 * (i - 1); };
    auto y = [](int i) { return 4 * (i - 1) + 1; };
    auto xb = [](int i) { return 4 * (i - 1) + 2; };
    auto z = [](int i) { return 4 * (i - 1) + 3; };
    for (int i = 1; i <= n; ++i) {
        b.weighted.add_edge(x(i), y(i), 4, k - 3);
        b.weighted.add_edge(xb(i), y(i), 4, k - 3);
        b.weighted.add_edge(x(i), z(i), 1, 1);
        b.weighted.add_edge(xb(i), z(i), 1, 1);
        b.groups["x"].push_back(x(i));
        b.groups["y"].push_back(y(i));
        b.groups["xbar"].push_back(xb(i));
        b.groups["z"].push_back(z(i));
    }
    for (int i = 1; i < n; ++i) b.weighted.add_edge(z(i), z(i + 1), 3, 3);
    for (int j = 0; j < m; ++j) {
        int c = 4 * n + j;
        b.groups["c"].push_back(c);
        for (int lit : formula[j]) {
            int v = lit > 0 ? x(lit) : xb(-lit);
            b.weighted.add_edge(v, c, 1, k - 2);
        }
    }
    for (int j = 0; j < m; ++j)
        for (int l = 0; l < 3; ++l) b.groups[idx("clause", j + 1)].push_back(formula[j][l]);
    b.expansion = expand_double_weighted(b.weighted, k);
    b.graph = b.expansion->graph;
    return b;
}

InstanceBundle gen_grid(int n, std::uint64_t seed) {
    if (n < 2) throw InvalidInput("grid side must be at least 2");
    InstanceBundle b;
    b.construction = "grid";
    b.parameters = {{"n", n}};
    b.graph = grid_graph(n);
    b.weighted = DoubleWeightedGraph(b.graph);
    b.k = n;
    b.groups["corners"] = {0, n - 1, n * (n - 1), n * n - 1};
    std::vector<Edge> t = grid_optimal_tree(n, seed);
    b.witness = SpanningTree(b.graph, t);
    return b;
}

SpanningTree ubp_tree(const InstanceBundle& b, const std::vector<int>& assignment) {
    if (b.construction != "ubp") throw InvalidInput("not a bin packing instance");
    const auto& q = b.groups.at("Q");
    const int r = b.groups.at("r").front();
    const auto items = static_cast<std::size_t>(b.parameters.at("n"));
    check_assignment(assignment, items, static_cast<int>(q.size()));
    std::vector<Edge> e;
    for (int v : q) e.push_back(make_edge(r, v));
    for (std::size_t i = 0; i < items; ++i)
        for (int u : item_vertices(b, i)) e.push_back(make_edge(u, q[assignment[i]]));
    return SpanningTree(b.weighted.graph, e);
}

SpanningTree three_partition_tree(const InstanceBundle& b, const std::vector<int>& assignment) {
    if (b.construction != "3partition") throw InvalidInput("not a 3-partition instance");
    const auto& q = b.groups.at("Q");
    const auto& c = b.groups.at("C");
    const int w = b.groups.at("w").front();
    const std::size_t items = 3 * static_cast<std::size_t>(b.parameters.at("n"));
    check_assignment(assignment, items, static_cast<int>(q.size()));
    const int c1 = c.front();
    std::vector<Edge> e;
    for (int v : q) e.push_back(make_edge(c1, v));
    for (std::size_t i = 1; i < c.size(); ++i) e.push_back(make_edge(c1, c[i]));
    e.push_back(make_edge(c1, w));
    for (std::size_t i = 0; i < items; ++i)
        for (int u : item_vertices(b, i)) e.push_back(make_edge(u, q[assignment[i]]));
    return SpanningTree(b.weighted.graph, e);
}

SpanningTree bsat_tree(const InstanceBundle& b, const std::vector<bool>& alpha, std::vector<int> clause_choice) {
    if (b.construction != "bsat") throw InvalidInput("not a (3,B2)-SAT instance");
    const int n = static_cast<int>(b.parameters.at("n"));
    const int m = static_cast<int>(b.parameters.at("m"));
    if (static_cast<int>(alpha.size()) != n) throw InvalidInput("assignment must give one value per variable");
    const auto &x = b.groups.at("x"), &y = b.groups.at("y"), &xb = b.groups.at("xbar"), &z = b.groups.at("z");
    const auto& c = b.groups.at("c");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back(make_edge(z[i], z[i + 1]));
    for (int i = 0; i < n; ++i) {
        e.push_back(make_edge(x[i], y[i]));
        e.push_back(make_edge(xb[i], y[i]));
        e.push_back(make_edge(alpha[i] ? x[i] : xb[i], z[i]));
    }
    if (clause_choice.empty()) {
        for (int j = 0; j < m; ++j) {
            const auto& lits = b.groups.at(idx("clause", j + 1));
            int pick = 0;
            for (int l = 0; l < 3; ++l) {
                int lit = lits[l];
                if ((lit > 0) == alpha[std::abs(lit) - 1]) {
                    pick = l;
                    break;
                }
            }
            clause_choice.push_back(pick);
        }
    }
    if (static_cast<int>(clause_choice.size()) != m) throw InvalidInput("one literal choice per clause");
    for (int j = 0; j < m; ++j) {
        int lit = b.groups.at(idx("clause", j + 1)).at(clause_choice[j]);
        int v = lit > 0 ? x[lit - 1] : xb[-lit - 1];
        e.push_back(make_edge(v, c[j]));
    }
    return SpanningTree(b.weighted.graph, e);
}

SpanningTree to_unweighted(const InstanceBundle& b, const SpanningTree& weighted_tree) {
    if (b.expansion) return lift_tree(*b.expansion, weighted_tree);
    return weighted_tree;
}

SpanningTree ubp_witness(const InstanceBundle& b, const std::vector<int>& assignment) {
    const auto& q = b.groups.at("Q");
    const auto bsize = b.parameters.at("B");
    check_assignment(assignment, static_cast<std::size_t>(b.parameters.at("n")), static_cast<int>(q.size()));
    std::vector<std::int64_t> load(q.size(), 0);
    for (std::size_t i = 0; i < assignment.size(); ++i)
        load[assignment[i]] += static_cast<std::int64_t>(item_vertices(b, i).size());
    for (auto l : load)
        if (l != bsize) throw InvalidInput("certificate is not a valid bin packing");
    return to_unweighted(b, ubp_tree(b, assignment));
}

SpanningTree three_partition_witness(const InstanceBundle& b, const std::vector<int>& assignment) {
    const auto& q = b.groups.at("Q");
    const auto bsize = b.parameters.at("B");
    check_assignment(assignment, 3 * static_cast<std::size_t>(b.parameters.at("n")), static_cast<int>(q.size()));
    std::vector<std::int64_t> load(q.size(), 0), count(q.size(), 0);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        load[assignment[i]] += static_cast<std::int64_t>(item_vertices(b, i).size());
        ++count[assignment[i]];
    }
    for (std::size_t j = 0; j < q.size(); ++j)
        if (load[j] != bsize || count[j] != 3) throw InvalidInput("certificate is not a valid 3-partition");
    return to_unweighted(b, three_partition_tree(b, assignment));
}

SpanningTree bsat_witness(const InstanceBundle& b, const std::vector<bool>& alpha) {
    const int m = static_cast<int>(b.parameters.at("m"));
    if (static_cast<int>(alpha.size()) != b.parameters.at("n"))
        throw InvalidInput("assignment must give one value per variable");
    for (int j = 0; j < m; ++j) {
        const auto& lits = b.groups.at(idx("clause", j + 1));
        bool sat = std::any_of(lits.begin(), lits.end(), [&](int lit) { return (lit > 0) == alpha[std::abs(lit) - 1]; });
        if (!sat) throw InvalidInput("assignment does not satisfy clause " + std::to_string(j + 1));
    }
    return to_unweighted(b, bsat_tree(b, alpha));
}

bool is_module(const Graph& g, const std::vector<int>& x) {
    std::vector<char> in(g.n(), 0);
    for (int v : x) in[v] = 1;
    for (int u = 0; u < g.n(); ++u) {
        if (in[u]) continue;
        int cnt = 0;
        for (int v : g.neighbors(u)) cnt += in[v];
        if (cnt != 0 && cnt != static_cast<int>(x.size())) return false;
    }
    return true;
}

} // namespace stc
