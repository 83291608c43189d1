#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "apg/canonical.hpp"
#include "apg/families.hpp"
#include "oracles.hpp"

using namespace apg;

TEST_CASE("canonical form is invariant under relabeling") {
    Graph c5a = cycle_graph(5);
    Graph c5b = relabel(c5a, {2, 4, 0, 3, 1});
    CHECK(canonical_form(c5a) == canonical_form(c5b));
    CHECK(is_isomorphic(c5a, c5b));
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    Graph k33 = complete_bipartite(3, 3);
    Graph k5_minus_matching = complete_graph(6);
    k5_minus_matching.remove_edge(0, 1);
    k5_minus_matching.remove_edge(2, 3);
    k5_minus_matching.remove_edge(4, 5);
    // both 3-regular on 6 vertices, still distinct
    CHECK(canonical_form(k33) != canonical_form(k5_minus_matching));
}

TEST_CASE("canonical classes match permutation orbits up to 6 vertices") {
    std::mt19937 rng(20240811);
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::uint32_t> reps = oracle::orbit_representatives(n);
        std::set<std::string> forms;
        for (std::uint32_t mask : reps) {
            Graph g = oracle::graph_from_mask(n, mask);
            std::string form = canonical_form(g);
            CHECK(forms.insert(form).second);  // distinct orbits, distinct forms
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabel(g, perm)) == form);
        }
        CHECK(forms.size() == oracle::orbit_class_count(n));
    }
}

TEST_CASE("canonical labeling handles highly symmetric graphs") {
    CHECK(canonical_form(Graph(7)) == canonical_form(Graph(7)));
    CHECK(is_isomorphic(complete_graph(7), relabel(complete_graph(7), {6, 5, 4, 3, 2, 1, 0})));
    Graph m6 = mobius_ladder(6);
    CHECK(is_isomorphic(m6, relabel(m6, {3, 4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 2})));
}

TEST_CASE("automorphism orbits") {
    // wheel: hub fixed, rim transitive
    std::vector<int> orbits = automorphism_orbits(wheel(5));
    CHECK(orbits[5] == 5);
    for (int v = 0; v < 5; ++v) CHECK(orbits[v] == 0);

    // path: ends and middle
    orbits = automorphism_orbits(path_graph(3));
    CHECK(orbits[0] == orbits[2]);
    CHECK(orbits[0] != orbits[1]);

    // Mobius ladders are vertex-transitive
    orbits = automorphism_orbits(mobius_ladder(4));
    for (int v = 0; v < 8; ++v) CHECK(orbits[v] == 0);
}
