#include <doctest.h>

#include "apg/canonical.hpp"
#include "apg/families.hpp"
#include "apg/graph.hpp"
#include "apg/planarity.hpp"
#include "oracles.hpp"

using namespace apg;

TEST_CASE("delete_edge basics") {
    Graph k5 = complete_graph(5);
    Graph g = delete_edge(k5, Edge(0, 1));
    CHECK(g.order() == 5);
    CHECK(g.size() == 9);
    CHECK(planar_bool(g));

    Graph p2 = path_graph(2);
    Graph iso = delete_edge(p2, Edge(0, 1));
    CHECK(iso.order() == 2);
    CHECK(iso.size() == 0);

    // a rim edge of a double wheel: deletion leaves a planar graph
    Graph dw4 = double_wheel(4);
    CHECK(planar_bool(delete_edge(dw4, Edge(0, 1))));
}

TEST_CASE("delete_edge missing edge errors") {
    Graph g = path_graph(3);
    CHECK_THROWS_AS(delete_edge(g, Edge(0, 2)), std::invalid_argument);
}

TEST_CASE("contract_edge basics") {
    Graph k3 = complete_graph(3);
    Graph k2 = contract_edge(k3, Edge(0, 1));
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);

    // a chord of the smallest Mobius ladder contracts to a planar graph
    Graph m3 = mobius_ladder(3);
    CHECK(planar_bool(contract_edge(m3, Edge(0, 3))));

    Graph k5 = complete_graph(5);
    Graph c = contract_edge(k5, Edge(2, 4));
    CHECK(c.order() == 4);
    CHECK(c.size() == 6);
    CHECK(is_isomorphic(c, complete_graph(4)));

    CHECK_THROWS_AS(contract_edge(k5, Edge(5, 6)), std::invalid_argument);
}

TEST_CASE("contraction always drops the order by one") {
    for (std::uint32_t mask : oracle::orbit_representatives(5)) {
        Graph g = oracle::graph_from_mask(5, mask);
        for (const Edge& e : g.edges()) CHECK(contract_edge(g, e).order() == g.order() - 1);
    }
}

TEST_CASE("delete_vertex basics") {
    CHECK(is_isomorphic(delete_vertex(complete_graph(4), 1), complete_graph(3)));

    Graph star = complete_bipartite(1, 3);
    Graph rest = delete_vertex(star, 0);
    CHECK(rest.order() == 3);
    CHECK(rest.size() == 0);

    Graph k33p = pendant_addition(complete_bipartite(3, 3));
    CHECK(is_isomorphic(delete_vertex(k33p, 6), complete_bipartite(3, 3)));

    CHECK_THROWS_AS(delete_vertex(star, 4), std::invalid_argument);
}

TEST_CASE("edit operations commute on disjoint supports") {
    Graph g = mobius_ladder(4);
    Edge e(0, 1), f(2, 3);
    CHECK(delete_edge(delete_edge(g, e), f) == delete_edge(delete_edge(g, f), e));
    CHECK(is_isomorphic(contract_edge(contract_edge(g, e), Edge(1, 2)),
                        contract_edge(contract_edge(g, Edge(2, 3)), Edge(0, 1))));
}

TEST_CASE("induced subgraph relabels densely") {
    Graph g = wheel(4);  // hub 4
    Graph h = induced_subgraph(g, vs_bit(1) | vs_bit(3) | vs_bit(4));
    CHECK(h.order() == 3);
    // rim vertices 1,3 are non-adjacent; both see the hub
    CHECK(h.has_edge(0, 2));
    CHECK(h.has_edge(1, 2));
    CHECK(!h.has_edge(0, 1));
}

TEST_CASE("graph6 decodes K5 from its standard line") {
    Graph g = graph6_decode("D~{");
    CHECK(g.order() == 5);
    CHECK(g.size() == 10);
    CHECK(is_isomorphic(g, complete_graph(5)));
}

TEST_CASE("graph6 encodes a single vertex as @") {
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_decode("@").order() == 1);
}

TEST_CASE("graph6 header is tolerated on decode, never emitted") {
    Graph g = graph6_decode(">>graph6<<D~{");
    CHECK(g.size() == 10);
    CHECK(graph6_encode(g).rfind(">>", 0) == std::string::npos);
}

TEST_CASE("graph6 round trip on every graph up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint32_t mask : oracle::orbit_representatives(n)) {
            Graph g = oracle::graph_from_mask(n, mask);
            CHECK(graph6_decode(graph6_encode(g)) == g);
        }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(graph6_decode(""), Graph6ParseError);

    try {
        graph6_decode("D~");  // too short for 5 vertices
        CHECK(false);
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset == 2);
    }

    try {
        graph6_decode(std::string("D~") + char(31));  // illegal character
        CHECK(false);
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset == 2);
    }

    try {
        graph6_decode("A~");  // nonzero padding bits for n=2
        CHECK(false);
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset == 1);
    }

    try {
        graph6_decode("D~{{");  // trailing characters
        CHECK(false);
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset == 3);
    }

    CHECK_THROWS_AS(graph6_decode("~??"), Graph6ParseError);  // long form refused
    CHECK_THROWS_AS(graph6_encode(Graph(63)), std::invalid_argument);
}

TEST_CASE("components and bipartiteness") {
    Graph g = disjoint_union(complete_graph(3), path_graph(2));
    CHECK(components(g).size() == 2);
    CHECK(!is_connected(g));
    CHECK(!is_bipartite(g));
    CHECK(is_bipartite(complete_bipartite(3, 4)));
    CHECK(is_connected(Graph(0)));
}

TEST_CASE("subdivide_edge builds the expected path") {
    Graph g = subdivide_edge(complete_graph(3), Edge(0, 1), 2);
    CHECK(g.order() == 5);
    CHECK(g.size() == 5);
    CHECK(!g.has_edge(0, 1));
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(3, 4));
    CHECK(g.has_edge(4, 1));
}
