#include <doctest.h>

#include <algorithm>

#include "apg/families.hpp"
#include "apg/planarity.hpp"
#include "oracles.hpp"

using namespace apg;

TEST_CASE("K4 embeds with four faces") {
    PlanarityResult r = is_planar(complete_graph(4));
    REQUIRE(r.planar);
    CHECK(verify_certificate(complete_graph(4), r.certificate));
    CHECK(embedding_face_count(complete_graph(4), r.certificate.rotation) == 4);
}

TEST_CASE("K33 is its own Kuratowski witness") {
    Graph k33 = complete_bipartite(3, 3);
    PlanarityResult r = is_planar(k33);
    REQUIRE(!r.planar);
    CHECK(r.certificate.kuratowski.tag == KuratowskiTag::K33);
    CHECK(r.certificate.kuratowski.edges.size() == 9);
    CHECK(r.certificate.kuratowski.branch_vertices.size() == 6);
    CHECK(verify_certificate(k33, r.certificate));
}

TEST_CASE("the triad additions of the Kuratowski graphs are nonplanar") {
    CHECK(!planar_bool(ex1()));
    CHECK(!planar_bool(ex2()));
    CHECK(!planar_bool(ex8()));
}

TEST_CASE("certificates are audited, not trusted") {
    // claim K33 over K5's edges: branch degrees are wrong
    Graph k5 = complete_graph(5);
    PlanarityCertificate bogus;
    bogus.planar = false;
    bogus.kuratowski.tag = KuratowskiTag::K33;
    bogus.kuratowski.edges = k5.edges();
    for (int v = 0; v < 5; ++v) bogus.kuratowski.branch_vertices.push_back(v);
    std::string why;
    CHECK(!verify_certificate(k5, bogus, &why));
    CHECK(!why.empty());

    // stripping residue of a denser nonplanar graph audits fine
    Graph ex8g = ex8();
    PlanarityResult r = is_planar(ex8g);
    REQUIRE(!r.planar);
    CHECK(verify_certificate(ex8g, r.certificate));

    // a valid embedding with one rotation swapped breaks Euler counting
    PlanarityResult k4 = is_planar(complete_graph(4));
    PlanarityCertificate tampered = k4.certificate;
    std::swap(tampered.rotation[0][0], tampered.rotation[0][1]);
    bool still_valid = verify_certificate(complete_graph(4), tampered);
    CHECK(!still_valid);
}

TEST_CASE("deletion-planar sets of the Kuratowski graphs are everything") {
    CHECK(deletion_planar_set(complete_graph(5)).size() == 10);
    CHECK(deletion_planar_set(complete_bipartite(3, 3)).size() == 9);
}

TEST_CASE("deletion-planar set of K33 plus a pendant omits the pendant edge") {
    Graph g = pendant_addition(complete_bipartite(3, 3));
    std::vector<Edge> d = deletion_planar_set(g);
    CHECK(d.size() == 9);
    CHECK(std::find(d.begin(), d.end(), Edge(0, 6)) == d.end());
}

TEST_CASE("contraction-planar sets") {
    // spokes of a double wheel contract to planar graphs
    Graph dw5 = double_wheel(5);
    std::vector<Edge> c = contraction_planar_set(dw5);
    CHECK(std::find(c.begin(), c.end(), Edge(0, 5)) != c.end());

    Graph k33p = pendant_addition(complete_bipartite(3, 3));
    std::vector<Edge> cp = contraction_planar_set(k33p);
    CHECK(std::find(cp.begin(), cp.end(), Edge(0, 6)) == cp.end());

    CHECK(contraction_planar_set(complete_graph(5)).size() == 10);
}

TEST_CASE("planar graphs have full deletion-planar sets") {
    for (std::uint32_t mask : oracle::orbit_representatives(5)) {
        Graph g = oracle::graph_from_mask(5, mask);
        if (!planar_bool(g)) continue;
        CHECK(deletion_planar_set(g).size() == static_cast<std::size_t>(g.size()));
    }
}

TEST_CASE("planarity is preserved by single minor steps") {
    for (std::uint32_t mask : oracle::orbit_representatives(6)) {
        Graph g = oracle::graph_from_mask(6, mask);
        if (!planar_bool(g)) continue;
        for (const Edge& e : g.edges()) {
            CHECK(planar_bool(delete_edge(g, e)));
            CHECK(planar_bool(contract_edge(g, e)));
        }
    }
}

TEST_CASE("planarity matches the subdivision-search oracle up to 6 vertices") {
    for (int n = 3; n <= 6; ++n)
        for (std::uint32_t mask : oracle::orbit_representatives(n)) {
            Graph g = oracle::graph_from_mask(n, mask);
            PlanarityResult r = is_planar(g);
            CHECK(r.planar == oracle::planar_by_subdivision_search(g));
            CHECK(verify_certificate(g, r.certificate));
        }
}

TEST_CASE("disconnected graphs embed component-wise") {
    Graph g = disjoint_union(complete_graph(4), cycle_graph(5));
    PlanarityResult r = is_planar(g);
    REQUIRE(r.planar);
    CHECK(verify_certificate(g, r.certificate));
    // v - e + f = 1 + c with the shared outer face
    CHECK(g.order() - g.size() + embedding_face_count(g, r.certificate.rotation) == 1 + 2);

    Graph bad = disjoint_union(complete_graph(5), path_graph(2));
    CHECK(!planar_bool(bad));
}
