#include "sosclique/bitgraph.hpp"

namespace sosclique {

std::vector<int> BitGraph::degeneracy_order() const {
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = degree(v);

    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (removed[v]) continue;
            if (best == -1 || deg[v] < deg[best]) best = v;
        }
        removed[best] = true;
        order.push_back(best);
        adj[best].for_each([&](int u) {
            if (!removed[u]) --deg[u];
        });
    }
    return order;
}

BitGraph BitGraph::relabeled(const std::vector<int>& order) const {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    BitGraph h(n);
    for (int v = 0; v < n; ++v)
        adj[v].for_each([&](int u) {
            if (u > v) h.add_edge(pos[v], pos[u]);
        });
    return h;
}

}  // namespace sosclique
