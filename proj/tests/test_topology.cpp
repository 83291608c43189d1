#include <doctest.h>

#include "apg/canonical.hpp"
#include "apg/families.hpp"
#include "apg/topology.hpp"

using namespace apg;

namespace {

TopologicalCore expect_core(const SuppressOutcome& out) {
    REQUIRE(std::holds_alternative<TopologicalCore>(out));
    return std::get<TopologicalCore>(out);
}

SuppressErrorKind expect_error(const SuppressOutcome& out) {
    REQUIRE(std::holds_alternative<SuppressError>(out));
    return std::get<SuppressError>(out).kind;
}

// rebuild on the input's own vertex ids and compare exactly
Graph rebuild(const TopologicalCore& tc, int input_order) {
    Graph g(input_order);
    for (const Edge& e : tc.core.edges()) {
        auto it = tc.path_map.find(e);
        int a = tc.core_to_input[e.u], b = tc.core_to_input[e.v];
        if (it == tc.path_map.end() || it->second.empty()) {
            g.add_edge(a, b);
            continue;
        }
        int prev = a;
        for (int x : it->second) {
            g.add_edge(prev, x);
            prev = x;
        }
        g.add_edge(prev, b);
    }
    return g;
}

}  // namespace

TEST_CASE("suppressing a single subdivision recovers K33") {
    Graph g = subdivide_edge(complete_bipartite(3, 3), Edge(0, 3), 1);
    TopologicalCore tc = expect_core(suppress_degree2(g));
    CHECK(is_isomorphic(tc.core, complete_bipartite(3, 3)));
    int chains = 0;
    for (const auto& [e, chain] : tc.path_map) chains += chain.empty() ? 0 : 1;
    CHECK(chains == 1);
    CHECK(rebuild(tc, g.order()) == g);
}

TEST_CASE("a graph of minimum degree three is its own core") {
    TopologicalCore tc = expect_core(suppress_degree2(complete_graph(4)));
    CHECK(tc.core == complete_graph(4));
    for (const auto& [e, chain] : tc.path_map) CHECK(chain.empty());
}

TEST_CASE("doubly subdivided Mobius ladder rims suppress back") {
    Graph g = mobius_ladder(4);
    std::vector<Edge> rim;
    for (int i = 0; i < 8; ++i) rim.emplace_back(i, (i + 1) % 8);
    for (const Edge& e : rim) g = subdivide_edge(g, e, 2);
    TopologicalCore tc = expect_core(suppress_degree2(g));
    CHECK(is_isomorphic(tc.core, mobius_ladder(4)));
    CHECK(is_isomorphic(expand_core(tc), g));
    CHECK(rebuild(tc, g.order()) == g);
}

TEST_CASE("suppress rejects improper inputs with distinct reasons") {
    CHECK(expect_error(suppress_degree2(cycle_graph(5))) == SuppressErrorKind::CycleInput);
    CHECK(expect_error(suppress_degree2(path_graph(4))) == SuppressErrorKind::DegreeOneVertex);
    CHECK(expect_error(suppress_degree2(disjoint_union(cycle_graph(3), complete_graph(4)))) ==
          SuppressErrorKind::NotConnected);

    // theta graph: two branch vertices joined by three paths; suppression
    // would create parallel edges
    Graph theta(5);
    theta.add_edge(0, 1);          // direct path
    theta.add_edge(0, 2);
    theta.add_edge(2, 1);          // path through 2
    theta.add_edge(0, 3);
    theta.add_edge(3, 4);
    theta.add_edge(4, 1);          // path through 3,4
    SuppressOutcome out = suppress_degree2(theta);
    CHECK(expect_error(out) == SuppressErrorKind::ParallelEdgeCollision);
    CHECK(std::get<SuppressError>(out).vertex >= 0);
}

TEST_CASE("random subdivisions round-trip through their core") {
    Graph base = wheel(5);
    Graph g = base;
    int i = 0;
    for (const Edge& e : base.edges()) g = subdivide_edge(g, e, (i++ % 3));
    TopologicalCore tc = expect_core(suppress_degree2(g));
    CHECK(is_isomorphic(tc.core, base));
    CHECK(rebuild(tc, g.order()) == g);
    CHECK(is_isomorphic(expand_core(tc), g));
}
