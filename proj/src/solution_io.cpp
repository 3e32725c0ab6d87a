#include "stc/solution_io.hpp"

#include <algorithm>

#include "json.hpp"
#include "stc/congestion.hpp"
#include "stc/errors.hpp"

namespace stc {

using nlohmann::ordered_json;

namespace {

std::string edge_key(int u, int v) { return std::to_string(u + 1) + "-" + std::to_string(v + 1); }

} // namespace

Solution make_solution(const DoubleWeightedGraph& g, const SpanningTree& t, std::string algorithm, bool certified) {
    Solution s;
    s.edges = t.edges();
    s.algorithm = std::move(algorithm);
    s.certified = certified;
    if (g.graph.n() > 1) {
        auto rep = congestion_report(g, t);
        s.k = rep.max_congestion;
        for (std::size_t i = 0; i < rep.edges.size(); ++i)
            s.per_edge[edge_key(rep.edges[i].first, rep.edges[i].second)] = rep.per_edge[i];
    }
    return s;
}

std::string solution_to_json(const Solution& s) {
    ordered_json j;
    j["k"] = s.k;
    j["edges"] = ordered_json::array();
    for (auto [u, v] : s.edges) j["edges"].push_back({u + 1, v + 1});
    // Listed in tree-edge order rather than by string comparison.
    j["per_edge_congestion"] = ordered_json::object();
    for (auto [u, v] : s.edges) {
        auto it = s.per_edge.find(edge_key(u, v));
        if (it != s.per_edge.end()) j["per_edge_congestion"][it->first] = it->second;
    }
    j["algorithm"] = s.algorithm;
    j["certified"] = s.certified;
    return j.dump(2) + "\n";
}

Solution parse_solution_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("solution file is not valid JSON: ") + e.what());
    }
    Solution s;
    try {
        s.k = j.at("k").get<std::int64_t>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InvalidInput("edge entries must be [u, v] pairs");
            int u = e[0].get<int>() - 1, v = e[1].get<int>() - 1;
            s.edges.push_back(make_edge(u, v));
        }
        if (j.contains("per_edge_congestion"))
            for (const auto& [key, val] : j.at("per_edge_congestion").items()) s.per_edge[key] = val.get<std::int64_t>();
        if (j.contains("algorithm")) s.algorithm = j.at("algorithm").get<std::string>();
        if (j.contains("certified")) s.certified = j.at("certified").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed solution file: ") + e.what());
    }
    return s;
}

std::optional<std::string> verify_solution(const DoubleWeightedGraph& g, const Solution& s) {
    for (auto [u, v] : s.edges)
        if (u < 0 || v >= g.graph.n()) return "edge " + edge_key(u, v) + " uses a vertex out of range";
    if (auto why = spanning_tree_violation(g.graph, s.edges)) return "not a spanning tree: " + *why;
    Solution fresh = make_solution(g, SpanningTree(g.graph, s.edges), s.algorithm, s.certified);
    if (fresh.k != s.k)
        return "claimed k = " + std::to_string(s.k) + " but the tree has congestion " + std::to_string(fresh.k);
    for (const auto& [key, val] : s.per_edge) {
        auto it = fresh.per_edge.find(key);
        if (it == fresh.per_edge.end()) return "per-edge entry " + key + " is not a tree edge";
        if (it->second != val)
            return "edge " + key + " claims congestion " + std::to_string(val) + " but has " + std::to_string(it->second);
    }
    return std::nullopt;
}

std::string bundle_to_json(const InstanceBundle& b) {
    ordered_json j;
    j["construction"] = b.construction;
    j["parameters"] = ordered_json::object();
    for (const auto& [key, val] : b.parameters) j["parameters"][key] = val;
    j["k"] = b.k;
    j["vertices"] = b.graph.n();
    j["edges"] = b.graph.m();
    j["host_vertices"] = b.weighted.graph.n();
    j["groups"] = ordered_json::object();
    for (const auto& [name, vs] : b.groups) {
        auto arr = ordered_json::array();
        // Clause groups hold literals, not vertex ids.
        bool literal = name.rfind("clause_", 0) == 0;
        for (int v : vs) arr.push_back(literal ? v : v + 1);
        j["groups"][name] = arr;
    }
    if (b.witness) {
        j["witness"] = ordered_json::array();
        for (auto [u, v] : b.witness->edges()) j["witness"].push_back({u + 1, v + 1});
    }
    return j.dump(2) + "\n";
}

} // namespace stc
