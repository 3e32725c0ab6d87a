#include "stc/skeleton.hpp"

#include <algorithm>

namespace stc {

int QuasiSkeleton::add_node(int vertex, int label, int anchor) {
    nodes.push_back({vertex, label, anchor, true});
    return static_cast<int>(nodes.size()) - 1;
}

int QuasiSkeleton::add_link(int a, int b, int label, std::uint32_t c) {
    links.push_back({a, b, label, c, true});
    return static_cast<int>(links.size()) - 1;
}

int QuasiSkeleton::degree(int v) const {
    int d = 0;
    for (auto& l : links)
        if (l.alive && (l.a == v || l.b == v)) ++d;
    return d;
}

std::vector<int> QuasiSkeleton::incident(int v) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(links.size()); ++i)
        if (links[i].alive && (links[i].a == v || links[i].b == v)) out.push_back(i);
    return out;
}

int QuasiSkeleton::alive_nodes() const {
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.alive; }));
}

void simplify(QuasiSkeleton& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < static_cast<int>(s.nodes.size()); ++v) {
            auto& nd = s.nodes[v];
            if (!nd.alive || nd.vertex >= 0) continue;
            auto inc = s.incident(v);
            if (inc.size() >= 3) continue;
            if (inc.size() == 2) {
                auto& l1 = s.links[inc[0]];
                auto& l2 = s.links[inc[1]];
                int u = l1.a == v ? l1.b : l1.a;
                int w = l2.a == v ? l2.b : l2.a;
                std::uint32_t c = std::max(l1.c, l2.c);
                l1.alive = l2.alive = false;
                s.add_link(u, w, nd.label, c);
            } else {
                for (int l : inc) s.links[l].alive = false;
            }
            s.nodes[v].alive = false;
            changed = true;
        }
    }
}

} // namespace stc
