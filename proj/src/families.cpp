#include "apg/families.hpp"

#include <algorithm>
#include <set>

#include "apg/canonical.hpp"
#include "apg/planarity.hpp"

namespace apg {

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cube_graph() {
    // vertices 0..7 as bit triples; class {0,3,5,6} relabeled to 0..3
    Graph g(8);
    std::vector<int> even{0, 3, 5, 6}, odd{1, 2, 4, 7};
    std::vector<int> id(8);
    for (int i = 0; i < 4; ++i) id[even[i]] = i, id[odd[i]] = 4 + i;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b) {
            int v = u ^ (1 << b);
            if (u < v) g.add_edge(id[u], id[v]);
        }
    return g;
}

Graph line_graph(const Graph& g) {
    std::vector<Edge> es = g.edges();
    Graph lg(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Edge &a = es[i], &b = es[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                lg.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return lg;
}

Graph wheel(int n) {
    if (n < 3) throw std::invalid_argument("wheel: n >= 3 required");
    Graph g(n + 1);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n);
    }
    return g;
}

Graph double_wheel(int n) {
    if (n < 3) throw std::invalid_argument("double_wheel: n >= 3 required");
    Graph g(n + 2);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n);
        g.add_edge(i, n + 1);
    }
    g.add_edge(n, n + 1);
    return g;
}

Graph mobius_ladder(int n) {
    if (n < 3) throw std::invalid_argument("mobius_ladder: n >= 3 required");
    Graph g(2 * n);
    for (int i = 0; i < 2 * n; ++i) g.add_edge(i, (i + 1) % (2 * n));
    for (int i = 0; i < n; ++i) g.add_edge(i, i + n);
    return g;
}

Graph squared_cycle(int n) {
    if (n < 5) throw std::invalid_argument("squared_cycle: n >= 5 required");
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, (i + 2) % n);
    }
    return g;
}

Graph alternating_double_wheel(int len) {
    if (len < 4 || len % 2 != 0)
        throw std::invalid_argument("alternating_double_wheel: even length >= 4 required");
    Graph g(len + 2);
    for (int i = 0; i < len; ++i) {
        g.add_edge(i, (i + 1) % len);
        g.add_edge(i, len + i % 2);
    }
    g.add_edge(len, len + 1);
    return g;
}

Graph cube_plus_apex() {
    Graph q = cube_graph();
    Graph g(9);
    for (const Edge& e : q.edges()) g.add_edge(e.u, e.v);
    for (int i = 0; i < 4; ++i) g.add_edge(i, 8);
    return g;
}

WClassResult w_class(const WClassSpec& spec) {
    for (const WheelDescriptor& w : spec.wheels) {
        if (w.rim < 3) throw std::invalid_argument("w_class: rim >= 3 required");
        if (w.placement == HubPlacement::None && w.rim != 3)
            throw std::invalid_argument("w_class: placement none requires rim 3");
    }
    int order = 3;
    for (const WheelDescriptor& w : spec.wheels) order += w.rim - 2;
    WClassResult out;
    out.graph = Graph(order);
    out.triangle = vs_bit(0) | vs_bit(1) | vs_bit(2);
    out.graph.add_edge(0, 1);
    out.graph.add_edge(0, 2);
    out.graph.add_edge(1, 2);

    int next = 3;
    for (int i = 0; i < 3; ++i) {
        const WheelDescriptor& w = spec.wheels[i];
        std::vector<int> priv(w.rim - 2);
        for (int& v : priv) {
            v = next++;
            out.wheel_private[i] |= vs_bit(v);
        }
        if (w.placement == HubPlacement::None) {
            // triangle is the rim of a W3; the private vertex is the hub
            for (int t = 0; t < 3; ++t) out.graph.add_edge(priv[0], t);
        } else {
            int hub = static_cast<int>(w.placement);  // Slot0..Slot2 -> 0..2
            int r1 = (hub + 1) % 3, r2 = (hub + 2) % 3;
            // rim cycle r1, r2, priv[0], ..., priv.back()
            std::vector<int> rim{r1, r2};
            rim.insert(rim.end(), priv.begin(), priv.end());
            for (std::size_t t = 0; t < rim.size(); ++t)
                if (!out.graph.has_edge(rim[t], rim[(t + 1) % rim.size()]))
                    out.graph.add_edge(rim[t], rim[(t + 1) % rim.size()]);
            for (int v : priv) out.graph.add_edge(hub, v);
        }
    }
    return out;
}

std::vector<Graph> triad_additions(const Graph& h) {
    if (h.order() < 3) throw std::invalid_argument("triad_additions: |h| >= 3 required");
    std::vector<Graph> out;
    std::set<std::string> seen;
    int n = h.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Graph g(n + 1);
                for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
                g.add_edge(a, n);
                g.add_edge(b, n);
                g.add_edge(c, n);
                if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
            }
    return out;
}

Graph pendant_addition(const Graph& h) {
    Graph g(h.order() + 1);
    for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
    g.add_edge(0, h.order());
    return g;
}

Graph oplus_edge(const Graph& h) {
    Graph g(h.order() + 2);
    for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
    g.add_edge(h.order(), h.order() + 1);
    return g;
}

Graph three_sum(const Graph& g1, const std::array<int, 3>& t1, const Graph& g2,
                const std::array<int, 3>& t2,
                const std::vector<std::pair<int, int>>& keep_pairs) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (!g1.has_edge(t1[i], t1[j])) throw std::invalid_argument("three_sum: t1 not a triangle");
            if (!g2.has_edge(t2[i], t2[j])) throw std::invalid_argument("three_sum: t2 not a triangle");
        }
    int n1 = g1.order();
    std::vector<int> map2(g2.order(), -1);
    for (int i = 0; i < 3; ++i) map2[t2[i]] = t1[i];
    int next = n1;
    for (int v = 0; v < g2.order(); ++v)
        if (map2[v] == -1) map2[v] = next++;

    Graph g(next);
    for (const Edge& e : g1.edges()) g.add_edge(e.u, e.v);
    for (const Edge& e : g2.edges())
        if (!g.has_edge(map2[e.u], map2[e.v])) g.add_edge(map2[e.u], map2[e.v]);

    std::set<std::pair<int, int>> keep;
    for (auto [i, j] : keep_pairs) keep.insert({std::min(i, j), std::max(i, j)});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!keep.count({i, j})) g.remove_edge(t1[i], t1[j]);
    return g;
}

namespace {

Graph handle_graph(const Graph& base, Edge e1, Edge e2) {
    // subdivide two edges sharing a vertex, join the two subdivision vertices
    int n = base.order();
    Graph g(n + 2);
    for (const Edge& e : base.edges())
        if (!(e == e1) && !(e == e2)) g.add_edge(e.u, e.v);
    g.add_edge(e1.u, n);
    g.add_edge(e1.v, n);
    g.add_edge(e2.u, n + 1);
    g.add_edge(e2.v, n + 1);
    g.add_edge(n, n + 1);
    return g;
}

}  // namespace

Graph ex1() { return complete_bipartite(3, 4); }

Graph ex2() {
    Graph g = complete_graph(6);
    g.remove_edge(3, 5);
    g.remove_edge(4, 5);
    return g;  // K5 on 0..4 plus vertex 5 joined to 0,1,2
}

Graph ex8() {
    Graph g = complete_bipartite(3, 3);
    Graph h(7);
    for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
    h.add_edge(0, 6);
    h.add_edge(1, 6);
    h.add_edge(3, 6);  // triad hits both color classes
    return h;
}

Graph k5h() { return handle_graph(complete_graph(5), Edge(0, 1), Edge(0, 2)); }

Graph k33h() { return handle_graph(complete_bipartite(3, 3), Edge(0, 3), Edge(0, 4)); }

Graph ex3() { return k33h(); }

Graph ex6() { return k5h(); }

std::vector<NamedGraph> obstruction_set_F() {
    return {{"EX1", ex1()}, {"EX2", ex2()}, {"EX3", ex3()}, {"EX6", ex6()}, {"EX8", ex8()}};
}

std::vector<NamedGraph> obstruction_set_Fprime() {
    return {{"K5+", pendant_addition(complete_graph(5))},
            {"K33+", pendant_addition(complete_bipartite(3, 3))},
            {"K5h", k5h()},
            {"K33h", k33h()},
            {"K5oe", oplus_edge(complete_graph(5))},
            {"K33oe", oplus_edge(complete_bipartite(3, 3))}};
}

bool validate_obstruction(const Graph& g) {
    if (planar_bool(g)) return false;
    for (const Edge& e : g.edges())
        if (!planar_bool(delete_edge(g, e)) && !planar_bool(contract_edge(g, e))) return true;
    return false;
}

namespace {

std::optional<int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
        if (v > 1000) return std::nullopt;
    }
    return v;
}

std::optional<Graph> parse_wclass(const std::string& body) {
    WClassSpec spec;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t end = i < 2 ? body.find(';', pos) : body.size();
        if (end == std::string::npos) return std::nullopt;
        std::string part = body.substr(pos, end - pos);
        std::size_t comma = part.find(',');
        if (comma == std::string::npos) return std::nullopt;
        auto rim = parse_int(part.substr(0, comma));
        if (!rim) return std::nullopt;
        std::string p = part.substr(comma + 1);
        HubPlacement placement;
        if (p == "0")
            placement = HubPlacement::Slot0;
        else if (p == "1")
            placement = HubPlacement::Slot1;
        else if (p == "2")
            placement = HubPlacement::Slot2;
        else if (p == "none")
            placement = HubPlacement::None;
        else
            return std::nullopt;
        spec.wheels[i] = {*rim, placement};
        pos = end + 1;
    }
    try {
        return w_class(spec).graph;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<Graph> registry_lookup(const std::string& key) {
    if (key == "K5") return complete_graph(5);
    if (key == "K33") return complete_bipartite(3, 3);
    if (key == "EX1") return ex1();
    if (key == "EX2") return ex2();
    if (key == "EX3") return ex3();
    if (key == "EX6") return ex6();
    if (key == "EX8") return ex8();
    if (key == "K5+") return pendant_addition(complete_graph(5));
    if (key == "K33+") return pendant_addition(complete_bipartite(3, 3));
    if (key == "K5h") return k5h();
    if (key == "K33h") return k33h();
    if (key == "K5oe") return oplus_edge(complete_graph(5));
    if (key == "K33oe") return oplus_edge(complete_bipartite(3, 3));
    auto prefixed = [&](const std::string& p) -> std::optional<std::string> {
        if (key.rfind(p, 0) == 0) return key.substr(p.size());
        return std::nullopt;
    };
    try {
        if (auto b = prefixed("W:")) {
            if (auto n = parse_int(*b)) return wheel(*n);
        } else if (auto b2 = prefixed("DW:")) {
            if (auto n = parse_int(*b2)) return double_wheel(*n);
        } else if (auto b3 = prefixed("M:")) {
            if (auto n = parse_int(*b3)) return mobius_ladder(*n);
        } else if (auto b4 = prefixed("C2:")) {
            if (auto n = parse_int(*b4)) return squared_cycle(*n);
        } else if (auto b5 = prefixed("AW:")) {
            if (auto n = parse_int(*b5)) return alternating_double_wheel(*n);
        } else if (auto b6 = prefixed("Wclass:")) {
            return parse_wclass(*b6);
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::string> registry_keys() {
    return {"K5",  "K33", "W:n", "DW:n", "M:n",  "C2:n", "AW:2n", "EX1",   "EX2",
            "EX3", "EX6", "EX8", "K5+",  "K33+", "K5h",  "K33h",  "K5oe",  "K33oe",
            "Wclass:n1,p1;n2,p2;n3,p3"};
}

}  // namespace apg
