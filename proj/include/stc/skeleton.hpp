#pragma once

#include <cstdint>
#include <vector>

namespace stc {

// Labels: -1 past, 0 present, +1 future.
struct QuasiSkeleton {
    struct Node {
        int vertex = -1;  // graph vertex for bag members, -1 for anonymous nodes
        int label = 0;
        int anchor = -1;  // for past anonymous nodes: the graph vertex they stood for when forgotten
        bool alive = true;
    };
    struct Link {
        int a = 0, b = 0;
        int label = 0;
        std::uint32_t c = 0;
        bool alive = true;
    };

    std::vector<Node> nodes;
    std::vector<Link> links;

    int add_node(int vertex, int label, int anchor = -1);
    int add_link(int a, int b, int label, std::uint32_t c);
    int degree(int v) const;
    std::vector<int> incident(int v) const;  // alive link ids
    int alive_nodes() const;
};

// Deletes anonymous nodes of degree <= 1 and contracts anonymous degree-2 nodes; the merged link keeps
// the node's label and the larger c. Repeats until no such node remains.
void simplify(QuasiSkeleton& s);

} // namespace stc
