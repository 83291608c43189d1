#include <doctest.h>

#include "apg/families.hpp"
#include "apg/minors.hpp"
#include "apg/planarity.hpp"
#include "oracles.hpp"

using namespace apg;

TEST_CASE("identity minor model of K5 in the smallest double wheel") {
    Graph k5 = complete_graph(5);
    auto m = has_minor(double_wheel(3), k5);
    REQUIRE(m.has_value());
    CHECK(verify_model(double_wheel(3), k5, *m));
}

TEST_CASE("K33h sits inside the line graph of K33") {
    Graph host = line_graph(complete_bipartite(3, 3));
    auto m = has_minor(host, k33h());
    REQUIRE(m.has_value());
    CHECK(verify_model(host, k33h(), *m));
}

TEST_CASE("K33 plus pendant sits inside the apexed cube") {
    Graph host = cube_plus_apex();
    Graph k33p = pendant_addition(complete_bipartite(3, 3));
    auto m = has_minor(host, k33p);
    REQUIRE(m.has_value());
    CHECK(verify_model(host, k33p, *m));
}

TEST_CASE("planar hosts contain no K5") {
    CHECK(!has_minor(wheel(8), complete_graph(5)));
    CHECK(!has_minor(cube_graph(), complete_graph(5)));
}

TEST_CASE("verify_model rejects broken witnesses") {
    Graph host = double_wheel(3);
    Graph k5 = complete_graph(5);
    auto m = has_minor(host, k5);
    REQUIRE(m.has_value());
    MinorModel bad = *m;
    bad.branch_sets[0] = bad.branch_sets[1];  // overlap
    std::string why;
    CHECK(!verify_model(host, k5, bad, &why));
    CHECK(why == "branch sets overlap");

    MinorModel disconnected = *m;
    disconnected.branch_sets[0] = vs_bit(0) | vs_bit(2);  // rim 0 and rim 2 of DW3
    CHECK(!verify_model(host, k5, disconnected, &why));
}

TEST_CASE("a model found in a Mobius ladder audits cleanly") {
    Graph host = mobius_ladder(5);
    Graph k33 = complete_bipartite(3, 3);
    auto m = has_minor(host, k33);
    REQUIRE(m.has_value());
    CHECK(verify_model(host, k33, *m));
}

TEST_CASE("free_of prefers the cheapest hit and reports its index") {
    std::vector<NamedGraph> fprime = obstruction_set_Fprime();
    std::vector<Graph> patterns;
    for (const NamedGraph& ng : fprime) patterns.push_back(ng.graph);

    Graph k33p = pendant_addition(complete_bipartite(3, 3));
    auto hit = free_of(k33p, patterns);
    REQUIRE(hit.has_value());
    CHECK(fprime[hit->first].name == "K33+");
    CHECK(verify_model(k33p, patterns[hit->first], hit->second));

    // a double wheel avoids every obstruction
    CHECK(!free_of(double_wheel(7), patterns).has_value());

    // EX2 contains the pendant addition of K5
    auto ex2_hit = free_of(ex2(), {pendant_addition(complete_graph(5))});
    CHECK(ex2_hit.has_value());
}

TEST_CASE("disconnected patterns work: K5 plus an edge") {
    Graph host = disjoint_union(complete_graph(5), path_graph(2));
    Graph pattern = oplus_edge(complete_graph(5));
    auto m = has_minor(host, pattern);
    REQUIRE(m.has_value());
    CHECK(verify_model(host, pattern, *m));
    // K33 plus an edge needs more room than K33 plus a pendant offers
    CHECK(!has_minor(pendant_addition(complete_bipartite(3, 3)),
                     oplus_edge(complete_bipartite(3, 3))));
}

TEST_CASE("minor search agrees with the partition oracle on small hosts") {
    Graph k5 = complete_graph(5);
    Graph k33 = complete_bipartite(3, 3);
    Graph k13 = complete_bipartite(1, 3);
    for (int n = 4; n <= 6; ++n)
        for (std::uint32_t mask : oracle::orbit_representatives(n)) {
            Graph g = oracle::graph_from_mask(n, mask);
            CHECK(has_minor(g, k5).has_value() == oracle::minor_by_partitions(g, k5));
            CHECK(has_minor(g, k33).has_value() == oracle::minor_by_partitions(g, k33));
            CHECK(has_minor(g, k13).has_value() == oracle::minor_by_partitions(g, k13));
        }
}

TEST_CASE("minor monotonicity under edge addition and deletion") {
    Graph pattern = complete_graph(4);
    Graph g = wheel(5);
    REQUIRE(has_minor(g, pattern));
    for (const Edge& e : g.edges()) {
        Graph h = delete_edge(g, e);
        if (has_minor(h, pattern)) CHECK(has_minor(g, pattern));
    }
}

TEST_CASE("minor order is transitive across the ladder families") {
    Graph c27 = squared_cycle(7);
    CHECK(has_minor(mobius_ladder(7), c27));
    MinorSearchLimits limits;
    limits.max_pattern_order = 14;
    CHECK(has_minor(mobius_ladder(8), mobius_ladder(7), nullptr, limits));
    CHECK(has_minor(mobius_ladder(8), c27));
}

TEST_CASE("cache hits return valid remapped models") {
    MinorCache cache;
    Graph host = mobius_ladder(5);
    Graph k33 = complete_bipartite(3, 3);
    auto first = has_minor(host, k33, &cache);
    REQUIRE(first.has_value());
    auto second = has_minor(host, k33, &cache);
    REQUIRE(second.has_value());
    CHECK(verify_model(host, k33, *second));
    // relabeled host still verifies through the cache
    std::vector<int> perm{9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
    Graph shuffled = relabel(host, perm);
    auto third = has_minor(shuffled, k33, &cache);
    REQUIRE(third.has_value());
    CHECK(verify_model(shuffled, k33, *third));
}

TEST_CASE("oversized patterns are refused") {
    CHECK_THROWS_AS(has_minor(mobius_ladder(8), mobius_ladder(6)), std::invalid_argument);
}

TEST_CASE("topological minors") {
    // cubic patterns: subdivision search is exact
    Graph m4 = mobius_ladder(4);
    Graph host = subdivide_edge(subdivide_edge(m4, Edge(0, 1), 2), Edge(2, 3), 1);
    auto w = has_topological_minor(host, m4);
    REQUIRE(w.has_value());
    CHECK(w->branch_map.size() == 8);

    // K5 has five branch candidates but a K33 subdivision needs six
    CHECK(!has_topological_minor(complete_graph(5), complete_bipartite(3, 3)));

    Graph k33_sub = subdivide_edge(complete_bipartite(3, 3), Edge(0, 3), 1);
    CHECK(has_topological_minor(k33_sub, complete_bipartite(3, 3)));
}
