#include "apg/topology.hpp"

#include <algorithm>

namespace apg {

SuppressOutcome suppress_degree2(const Graph& g) {
    int n = g.order();
    if (!is_connected(g)) return SuppressError{SuppressErrorKind::NotConnected};
    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= 1) return SuppressError{SuppressErrorKind::DegreeOneVertex, v};
    bool all_two = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) all_two = false;
    if (all_two) return SuppressError{SuppressErrorKind::CycleInput};

    // Work on original ids; chains[e] lists suppressed vertices of the current
    // edge e, ordered from e.u to e.v.
    std::vector<VertexSet> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::map<Edge, std::vector<int>> chains;

    auto chain_of = [&](int from, int to) {
        Edge e(from, to);
        auto it = chains.find(e);
        if (it == chains.end()) return std::vector<int>{};
        std::vector<int> c = it->second;
        if (from != e.u) std::reverse(c.begin(), c.end());
        return c;
    };

    VertexSet alive = g.vertex_mask();
    for (;;) {
        int target = -1;
        for (int v : VsRange(alive))
            if (vs_count(adj[v]) == 2) {
                target = v;
                break;
            }
        if (target == -1) break;
        int a = vs_lowest(adj[target]);
        int b = vs_lowest(adj[target] & (adj[target] - 1));
        if (vs_test(adj[a], b)) return SuppressError{SuppressErrorKind::ParallelEdgeCollision, target};

        std::vector<int> left = chain_of(a, target);
        std::vector<int> right = chain_of(target, b);
        std::vector<int> merged = std::move(left);
        merged.push_back(target);
        merged.insert(merged.end(), right.begin(), right.end());
        chains.erase(Edge(a, target));
        chains.erase(Edge(target, b));
        Edge e(a, b);
        if (a != e.u) std::reverse(merged.begin(), merged.end());
        chains[e] = std::move(merged);

        adj[a] = (adj[a] & ~vs_bit(target)) | vs_bit(b);
        adj[b] = (adj[b] & ~vs_bit(target)) | vs_bit(a);
        adj[target] = 0;
        alive &= ~vs_bit(target);
    }

    TopologicalCore out;
    std::vector<int> newid(n, -1);
    for (int v : VsRange(alive)) {
        newid[v] = static_cast<int>(out.core_to_input.size());
        out.core_to_input.push_back(v);
    }
    out.core = Graph(static_cast<int>(out.core_to_input.size()));
    for (int v : VsRange(alive))
        for (int w : VsRange(adj[v]))
            if (w > v) out.core.add_edge(newid[v], newid[w]);
    for (auto& [e, chain] : chains) {
        Edge ce(newid[e.u], newid[e.v]);
        std::vector<int> c = chain;
        // reorient so the chain runs from the smaller core id's input vertex
        if (newid[e.u] != ce.u) std::reverse(c.begin(), c.end());
        out.path_map[ce] = std::move(c);
    }
    return out;
}

Graph expand_core(const TopologicalCore& tc) {
    Graph g = tc.core;
    for (const auto& [e, chain] : tc.path_map)
        g = subdivide_edge(g, e, static_cast<int>(chain.size()));
    return g;
}

}  // namespace apg
