#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

// --- elementary graphs ---

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // part A = 0..a-1, part B = a..a+b-1
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph cube_graph();      // Q3; bipartition classes {0..3} and {4..7}
Graph line_graph(const Graph& g);

// --- named families ---

// Cycle 0..n-1 plus hub n joined to every rim vertex.
Graph wheel(int n);
// Cycle 0..n-1 plus adjacent hubs n, n+1 joined to every rim vertex.
Graph double_wheel(int n);
// Cycle 0..2n-1 plus chords {i, i+n}.
Graph mobius_ladder(int n);
// Cycle 0..n-1 plus chords between vertices at cycle distance two.
Graph squared_cycle(int n);
// Even cycle 0..len-1 plus adjacent hubs len, len+1; hub len takes the even
// rim vertices, hub len+1 the odd ones.
Graph alternating_double_wheel(int len);
// Q3 plus an apex joined to one bipartition class.
Graph cube_plus_apex();

// --- wheel identifications (the class built from three wheels) ---

enum class HubPlacement { Slot0, Slot1, Slot2, None };

struct WheelDescriptor {
    int rim = 3;
    HubPlacement placement = HubPlacement::Slot0;
};

struct WClassSpec {
    std::array<WheelDescriptor, 3> wheels;
};

struct WClassResult {
    Graph graph;
    VertexSet triangle = 0;                  // the common triangle (vertices 0,1,2)
    std::array<VertexSet, 3> wheel_private;  // private vertices per wheel
};

// Identifies one designated triangle from each of three wheels into a common
// triangle. A slot placement puts the wheel's hub on that triangle vertex;
// None (rim 3 only) leaves the hub private. Two hubs may share a slot.
WClassResult w_class(const WClassSpec& spec);

// --- composition operators ---

// One representative per isomorphism class of adding a new vertex joined to
// three distinct vertices of h.
std::vector<Graph> triad_additions(const Graph& h);
// h plus a pendant vertex attached at vertex 0 (unique up to isomorphism for
// the vertex-transitive graphs this toolkit applies it to).
Graph pendant_addition(const Graph& h);
// h plus two adjacent new vertices.
Graph oplus_edge(const Graph& h);

// Identifies triangle t1 of g1 with t2 of g2 under the given vertex
// correspondence (t1[i] ~ t2[i]); of the three identified edges, exactly those
// whose index pair {i,j} is in `keep_pairs` remain. Vertices of g1 keep their
// ids; g2's non-triangle vertices follow.
Graph three_sum(const Graph& g1, const std::array<int, 3>& t1, const Graph& g2,
                const std::array<int, 3>& t2, const std::vector<std::pair<int, int>>& keep_pairs);

// --- obstruction graphs ---

struct NamedGraph {
    std::string name;
    Graph graph;
};

Graph ex1();   // the triad addition of K33 attaching inside one color class (= K_{3,4})
Graph ex2();   // the triad addition of K5
Graph ex8();   // the other triad addition of K33
Graph k5h();   // K5 with two adjacent edges subdivided and the two new vertices joined
Graph k33h();  // K33 with two adjacent edges subdivided and the two new vertices joined
Graph ex3();   // = k33h
Graph ex6();   // = k5h

// {EX1, EX2, EX3, EX6, EX8}: the obstructions among 3-connected graphs.
std::vector<NamedGraph> obstruction_set_F();
// {K5+, K33+, K5h, K33h, K5oe, K33oe}: the obstructions for arbitrary graphs.
std::vector<NamedGraph> obstruction_set_Fprime();

// True iff g is nonplanar and some edge has both its deletion and its
// contraction nonplanar (g is not almost-planar).
bool validate_obstruction(const Graph& g);

// --- registry ---

// Keys: K5, K33, W:n, DW:n, M:n, C2:n, AW:2n, EX1, EX2, EX3, EX6, EX8,
// K5+, K33+, K5h, K33h, K5oe, K33oe, Wclass:n1,p1;n2,p2;n3,p3 (p in 0|1|2|none).
std::optional<Graph> registry_lookup(const std::string& key);
std::vector<std::string> registry_keys();

}  // namespace apg
