#include "apg/graph.hpp"

#include <algorithm>

namespace apg {

Graph delete_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v))
        throw std::invalid_argument("delete_edge: edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "} not in graph");
    Graph h = g;
    h.remove_edge(e.u, e.v);
    return h;
}

Graph contract_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v))
        throw std::invalid_argument("contract_edge: edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "} not in graph");
    // Merge v into u, then delete v. Parallel edges collapse and the loop
    // u-u is dropped, so the result stays simple.
    int n = g.order();
    Graph h(n - 1);
    auto newid = [&](int w) { return w < e.v ? w : w - 1; };
    for (int a = 0; a < n; ++a) {
        if (a == e.v) continue;
        for (int b : VsRange(g.neighbors(a))) {
            if (b <= a && b != e.v) continue;  // each unordered pair once
            if (b == e.v) {
                if (a != e.u) h.add_edge(newid(a), newid(e.u));
            } else {
                h.add_edge(newid(a), newid(b));
            }
        }
    }
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("delete_vertex: vertex out of range");
    return induced_subgraph(g, g.vertex_mask() & ~vs_bit(v));
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::vector<int> newid(g.order(), -1);
    int k = 0;
    for (int v : VsRange(keep))
        if (v < g.order()) newid[v] = k++;
    Graph h(k);
    for (int v : VsRange(keep)) {
        if (v >= g.order()) continue;
        for (int w : VsRange(g.neighbors(v) & keep))
            if (w > v) h.add_edge(newid[v], newid[w]);
    }
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.order() + b.order());
    for (const Edge& e : a.edges()) h.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) h.add_edge(e.u + a.order(), e.v + a.order());
    return h;
}

Graph subdivide_edge(const Graph& g, Edge e, int times) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("subdivide_edge: edge not in graph");
    if (times < 0) throw std::invalid_argument("subdivide_edge: negative count");
    if (times == 0) return g;
    Graph h(g.order() + times);
    for (const Edge& f : g.edges())
        if (!(f == e)) h.add_edge(f.u, f.v);
    int prev = e.u;
    for (int i = 0; i < times; ++i) {
        h.add_edge(prev, g.order() + i);
        prev = g.order() + i;
    }
    h.add_edge(prev, e.v);
    return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("relabel: permutation size mismatch");
    Graph h(g.order());
    for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

std::vector<VertexSet> components(const Graph& g) {
    return components_within(g, g.vertex_mask());
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (int s : VsRange(within)) {
        if (vs_test(seen, s)) continue;
        VertexSet comp = vs_bit(s), frontier = vs_bit(s);
        while (frontier != 0) {
            VertexSet next = 0;
            for (int v : VsRange(frontier)) next |= g.neighbors(v) & within & ~comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return components(g).size() == 1;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : VsRange(g.neighbors(v))) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// --- graph6 ---

Graph graph6_decode(const std::string& line) {
    static const std::string kHeader = ">>graph6<<";
    std::size_t i = 0;
    if (line.rfind(kHeader, 0) == 0) i = kHeader.size();
    if (i >= line.size()) throw Graph6ParseError(i, "missing order byte");

    unsigned char c0 = static_cast<unsigned char>(line[i]);
    if (c0 < 63 || c0 > 126) throw Graph6ParseError(i, "illegal character");
    if (c0 == 126) throw Graph6ParseError(i, "long-form order not supported");
    int n = c0 - 63;
    ++i;

    long bits = static_cast<long>(n) * (n - 1) / 2;
    std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - i < bytes) throw Graph6ParseError(line.size(), "line too short for order");
    if (line.size() - i > bytes) throw Graph6ParseError(i + bytes, "trailing characters");

    Graph g(n);
    long b = 0;
    int row = 0, col = 1;
    for (std::size_t k = 0; k < bytes; ++k) {
        unsigned char c = static_cast<unsigned char>(line[i + k]);
        if (c < 63 || c > 126) throw Graph6ParseError(i + k, "illegal character");
        int group = c - 63;
        for (int bit = 5; bit >= 0; --bit, ++b) {
            int val = (group >> bit) & 1;
            if (b >= bits) {
                if (val != 0) throw Graph6ParseError(i + k, "nonzero padding bits");
                continue;
            }
            if (val) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6_encode: order > 62 not supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

}  // namespace apg
