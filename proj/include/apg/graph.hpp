#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace apg {

// Vertex subsets as bitmasks. 128 bits: structural searches build hosts
// (double wheels, Mobius ladders) well past 64 vertices.
using VertexSet = unsigned __int128;

constexpr int kMaxOrder = 120;

inline VertexSet vs_bit(int i) { return VertexSet{1} << i; }
inline bool vs_test(VertexSet s, int i) { return (s >> i) & 1; }

inline int vs_count(VertexSet s) {
    return __builtin_popcountll(static_cast<std::uint64_t>(s)) +
           __builtin_popcountll(static_cast<std::uint64_t>(s >> 64));
}

inline int vs_lowest(VertexSet s) {
    auto lo = static_cast<std::uint64_t>(s);
    if (lo != 0) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<std::uint64_t>(s >> 64));
}

// Iterates set bits low to high: for (int v : VsRange(mask)) ...
struct VsRange {
    VertexSet bits;
    struct iterator {
        VertexSet rest;
        int operator*() const { return vs_lowest(rest); }
        iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    explicit VsRange(VertexSet s) : bits(s) {}
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};

// Undirected edge, endpoints normalized so u < v. Loops are rejected.
struct Edge {
    int u = 0, v = 0;
    Edge() = default;
    Edge(int a, int b) {
        if (a == b) throw std::invalid_argument("loop edge {" + std::to_string(a) + "}");
        u = a < b ? a : b;
        v = a < b ? b : a;
    }
    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Simple undirected graph on dense vertex ids 0..n-1.
// Values are cheap to copy; every editing operation below returns a new graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order) : n_(order), adj_(order, 0) {
        if (order < 0 || order > kMaxOrder)
            throw std::invalid_argument("graph order out of range: " + std::to_string(order));
    }

    static Graph from_edges(int order, const std::vector<Edge>& edges) {
        Graph g(order);
        for (const Edge& e : edges) g.add_edge(e.u, e.v);
        return g;
    }

    int order() const { return n_; }

    int size() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += degree(v);
        return m / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && vs_test(adj_[u], v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        adj_[u] |= vs_bit(v);
        adj_[v] |= vs_bit(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u] &= ~vs_bit(v);
        adj_[v] &= ~vs_bit(u);
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return vs_count(neighbors(v)); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : VsRange(adj_[u] >> (u + 1) << (u + 1))) out.emplace_back(u, v);
        return out;
    }

    VertexSet vertex_mask() const {
        return n_ == 0 ? VertexSet{0} : ((vs_bit(n_ - 1) - 1) | vs_bit(n_ - 1));
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// --- pure editing operations ---

Graph delete_edge(const Graph& g, Edge e);
Graph contract_edge(const Graph& g, Edge e);
Graph delete_vertex(const Graph& g, int v);

// Induced subgraph on `keep`; vertices relabeled densely in ascending id order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph disjoint_union(const Graph& a, const Graph& b);
// Appends `times` new vertices splitting e into a path; new ids at the end,
// in path order from e.u to e.v.
Graph subdivide_edge(const Graph& g, Edge e, int times);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // perm[old] = new

// --- connectivity-free structural queries ---

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
// Component masks of g restricted to `within` (other vertices ignored).
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);
bool is_bipartite(const Graph& g);

// --- graph6 interchange ---

struct Graph6ParseError : std::runtime_error {
    std::size_t offset;
    Graph6ParseError(std::size_t off, const std::string& what)
        : std::runtime_error("graph6 parse error at byte " + std::to_string(off) + ": " + what),
          offset(off) {}
};

// Standard graph6 line. Decode tolerates an optional ">>graph6<<" header;
// encode never emits one and supports order <= 62 (short form).
Graph graph6_decode(const std::string& line);
std::string graph6_encode(const Graph& g);

}  // namespace apg
