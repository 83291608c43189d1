#include "apg/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace apg {

namespace {

// Max number of internally disjoint s-t paths for non-adjacent s,t:
// unit-capacity flow on the split network (v_in -> v_out per vertex,
// s and t unsplit). BFS augmentation; flow is at most n.
int disjoint_paths(const Graph& g, int s, int t) {
    int n = g.order();
    // node 2v = v_in, 2v+1 = v_out
    std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (int v = 0; v < n; ++v)
        for (int w : VsRange(g.neighbors(v))) cap[2 * v + 1][2 * w] = n;

    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    for (;;) {
        std::vector<int> prev(2 * n, -1);
        std::queue<int> q;
        q.push(source);
        prev[source] = source;
        while (!q.empty() && prev[sink] == -1) {
            int x = q.front();
            q.pop();
            for (int y = 0; y < 2 * n; ++y)
                if (cap[x][y] > 0 && prev[y] == -1) {
                    prev[y] = x;
                    q.push(y);
                }
        }
        if (prev[sink] == -1) return flow;
        for (int y = sink; y != source; y = prev[y]) {
            cap[prev[y]][y] -= 1;
            cap[y][prev[y]] += 1;
        }
        ++flow;
    }
}

bool induces_k13(const Graph& g, VertexSet side) {
    if (vs_count(side) != 4) return false;
    int edges = 0, deg3 = 0, deg1 = 0;
    for (int v : VsRange(side)) {
        int d = vs_count(g.neighbors(v) & side);
        edges += d;
        if (d == 3) ++deg3;
        if (d == 1) ++deg1;
    }
    return edges == 6 && deg3 == 1 && deg1 == 3;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    long complete_edges = static_cast<long>(n) * (n - 1) / 2;
    if (g.size() == complete_edges) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, disjoint_paths(g, s, t));
    return best;
}

bool is_three_connected(const Graph& g) { return vertex_connectivity(g) >= 3; }

std::vector<Separation> separations_of_order(const Graph& g, int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("separations_of_order: k must be 0..3");
    int n = g.order();
    std::vector<Separation> out;
    if (n < k) return out;

    std::vector<int> cut(k);
    auto emit_for_cut = [&](VertexSet cutset) {
        std::vector<VertexSet> comps = components_within(g, g.vertex_mask() & ~cutset);
        int c = static_cast<int>(comps.size());
        if (c < 2) return;
        // unordered splits: component 0 always on side A
        for (unsigned mask = 0; mask < (1u << (c - 1)); ++mask) {
            VertexSet a = comps[0], b = 0;
            for (int i = 1; i < c; ++i) {
                if ((mask >> (i - 1)) & 1)
                    a |= comps[i];
                else
                    b |= comps[i];
            }
            if (b == 0) continue;
            out.push_back({a | cutset, b | cutset, k});
        }
    };

    // all k-subsets
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            VertexSet cs = 0;
            for (int i = 0; i < k; ++i) cs |= vs_bit(idx[i]);
            emit_for_cut(cs);
            return;
        }
        for (int v = start; v < n; ++v) {
            idx[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

bool is_internally_4_connected(const Graph& g) {
    if (g.order() < 5) return false;
    if (!is_three_connected(g)) return false;
    for (const Separation& s : separations_of_order(g, 3)) {
        bool a = induces_k13(g, s.side_a);
        bool b = induces_k13(g, s.side_b);
        if (a == b) return false;
    }
    return true;
}

bool is_strongly_connected3(const Graph& g) {
    if (!is_three_connected(g)) throw std::invalid_argument("is_strongly_connected3: input not 3-connected");
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                VertexSet rest = g.vertex_mask() & ~(vs_bit(a) | vs_bit(b) | vs_bit(c));
                if (components_within(g, rest).size() > 2) return false;
            }
    return true;
}

namespace {

Graph side_subgraph(const Graph& g, const Separation& s, SeparationSide side, VertexSet& boundary_out,
                    std::vector<int>& newid_out) {
    if (s.order != 3 || vs_count(s.side_a & s.side_b) != 3)
        throw std::invalid_argument("separation order must be exactly 3");
    VertexSet keep = side == SeparationSide::A ? s.side_a : s.side_b;
    boundary_out = s.side_a & s.side_b;
    newid_out.assign(g.order(), -1);
    int k = 0;
    for (int v : VsRange(keep)) newid_out[v] = k++;
    return induced_subgraph(g, keep);
}

}  // namespace

Graph g_delta(const Graph& g, const Separation& s, SeparationSide side) {
    VertexSet boundary;
    std::vector<int> newid;
    Graph h = side_subgraph(g, s, side, boundary, newid);
    std::vector<int> b;
    for (int v : VsRange(boundary)) b.push_back(newid[v]);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!h.has_edge(b[i], b[j])) h.add_edge(b[i], b[j]);
    return h;
}

Graph g_y(const Graph& g, const Separation& s, SeparationSide side) {
    VertexSet boundary;
    std::vector<int> newid;
    Graph h = side_subgraph(g, s, side, boundary, newid);
    Graph out(h.order() + 1);
    for (const Edge& e : h.edges()) out.add_edge(e.u, e.v);
    for (int v : VsRange(boundary)) out.add_edge(newid[v], h.order());
    return out;
}

}  // namespace apg
