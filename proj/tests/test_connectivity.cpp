#include <doctest.h>

#include "apg/canonical.hpp"
#include "apg/connectivity.hpp"
#include "apg/families.hpp"
#include "oracles.hpp"

using namespace apg;

TEST_CASE("vertex connectivity landmarks") {
    CHECK(vertex_connectivity(complete_graph(5)) == 4);
    CHECK(vertex_connectivity(wheel(5)) == 3);
    CHECK(vertex_connectivity(pendant_addition(complete_bipartite(3, 3))) == 1);
    CHECK(vertex_connectivity(Graph(1)) == 0);
    CHECK(vertex_connectivity(disjoint_union(complete_graph(3), Graph(1))) == 0);
    CHECK(vertex_connectivity(cycle_graph(6)) == 2);
    CHECK(is_three_connected(complete_graph(4)));
    CHECK(!is_three_connected(cycle_graph(4)));
}

TEST_CASE("vertex connectivity agrees with exhaustive cut search") {
    for (int n = 2; n <= 6; ++n)
        for (std::uint32_t mask : oracle::orbit_representatives(n)) {
            Graph g = oracle::graph_from_mask(n, mask);
            CHECK(vertex_connectivity(g) == oracle::connectivity_by_cut_search(g));
        }
}

TEST_CASE("separations of K5 are empty for every order up to 3") {
    Graph k5 = complete_graph(5);
    for (int k = 0; k <= 3; ++k) CHECK(separations_of_order(k5, k).empty());
}

TEST_CASE("pendant vertex yields the expected 1-separation") {
    Graph g = pendant_addition(complete_bipartite(3, 3));  // pendant 6 attached at 0
    std::vector<Separation> seps = separations_of_order(g, 1);
    REQUIRE(seps.size() == 1);
    VertexSet small = vs_count(seps[0].side_a) < vs_count(seps[0].side_b) ? seps[0].side_a
                                                                          : seps[0].side_b;
    CHECK(small == (vs_bit(0) | vs_bit(6)));
    CHECK(seps[0].order == 1);
}

TEST_CASE("three identified wheels separate at the common triangle") {
    WClassSpec spec{{{{4, HubPlacement::Slot0}, {4, HubPlacement::Slot1}, {4, HubPlacement::Slot2}}}};
    WClassResult w = w_class(spec);
    bool triangle_sep = false;
    for (const Separation& s : separations_of_order(w.graph, 3))
        if ((s.side_a & s.side_b) == w.triangle) triangle_sep = true;
    CHECK(triangle_sep);
    CHECK(components_within(w.graph, w.graph.vertex_mask() & ~w.triangle).size() == 3);
}

TEST_CASE("internal 4-connectivity") {
    CHECK(is_internally_4_connected(mobius_ladder(4)));
    CHECK(!is_internally_4_connected(wheel(5)));
    CHECK(is_internally_4_connected(complete_graph(5)));  // no 3-separations at all
    CHECK(is_internally_4_connected(complete_bipartite(3, 3)));
    CHECK(!is_internally_4_connected(complete_graph(4)));  // too small
}

TEST_CASE("strongly connected 3-cuts") {
    CHECK(is_strongly_connected3(complete_graph(5)));
    CHECK(is_strongly_connected3(double_wheel(6)));
    WClassSpec spec{{{{4, HubPlacement::Slot0}, {4, HubPlacement::Slot1}, {4, HubPlacement::Slot2}}}};
    CHECK(!is_strongly_connected3(w_class(spec).graph));
    CHECK_THROWS_AS(is_strongly_connected3(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("g_delta restores the triangle, g_y adds a cubic vertex") {
    // 3-sum of K5 and W4 over a triangle, then split back at that triangle
    Graph k5 = complete_graph(5);
    Graph w4 = wheel(4);  // triangle 0,1,4 (rim pair + hub)
    Graph sum = three_sum(k5, {0, 1, 2}, w4, {0, 1, 4}, {{0, 1}});
    // boundary triangle is k5's 0,1,2; the K5 side is all of k5's vertices
    Separation s;
    s.side_a = vs_bit(0) | vs_bit(1) | vs_bit(2) | vs_bit(3) | vs_bit(4);
    s.side_b = (sum.vertex_mask() & ~s.side_a) | vs_bit(0) | vs_bit(1) | vs_bit(2);
    s.order = 3;
    Graph delta = g_delta(sum, s, SeparationSide::A);
    CHECK(is_isomorphic(delta, k5));

    Graph y = g_y(sum, s, SeparationSide::B);
    CHECK(y.degree(y.order() - 1) == 3);

    // a side whose boundary already induces a triangle is the plain induced subgraph
    Graph plain = induced_subgraph(complete_graph(6), vs_bit(0) | vs_bit(1) | vs_bit(2) | vs_bit(3));
    Separation t;
    t.side_a = vs_bit(0) | vs_bit(1) | vs_bit(2) | vs_bit(3);
    t.side_b = complete_graph(6).vertex_mask() & ~vs_bit(3);
    t.order = 3;
    CHECK(g_delta(complete_graph(6), t, SeparationSide::A) == plain);
}

TEST_CASE("every 3-separation reassembles by summing the two delta sides") {
    Graph g = wheel(5);
    for (const Separation& s : separations_of_order(g, 3)) {
        Graph a = g_delta(g, s, SeparationSide::A);
        Graph b = g_delta(g, s, SeparationSide::B);
        // boundary vertices keep their relative order under dense relabeling
        std::array<int, 3> ta{}, tb{};
        int ia = 0, ib = 0, pa = 0, pb = 0;
        for (int v = 0; v < g.order(); ++v) {
            bool in_a = vs_test(s.side_a, v), in_b = vs_test(s.side_b, v);
            if (in_a && in_b) {
                ta[ia++] = pa;
                tb[ib++] = pb;
            }
            if (in_a) ++pa;
            if (in_b) ++pb;
        }
        std::vector<std::pair<int, int>> keep;
        int bnd[3];
        int t = 0;
        for (int v : VsRange(s.side_a & s.side_b)) bnd[t++] = v;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g.has_edge(bnd[i], bnd[j])) keep.push_back({i, j});
        Graph rebuilt = three_sum(a, ta, b, tb, keep);
        CHECK(is_isomorphic(rebuilt, g));
    }
}
