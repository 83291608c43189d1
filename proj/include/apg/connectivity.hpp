#pragma once

#include <vector>

#include "apg/graph.hpp"

namespace apg {

// A separation {side_a, side_b}: both proper, union covers V, no edge joins
// the private part of one side to the private part of the other.
struct Separation {
    VertexSet side_a = 0;
    VertexSet side_b = 0;
    int order = 0;  // |side_a & side_b|
};

enum class SeparationSide { A, B };

// Minimum number of vertices whose deletion disconnects g or leaves a single
// vertex; complete graphs yield n-1. Exact, via internally-disjoint-path
// counting (max-flow on the split-vertex network) over non-adjacent pairs.
int vertex_connectivity(const Graph& g);

bool is_three_connected(const Graph& g);

// All separations of order exactly k (k <= 3), one per unordered pair of
// sides, enumerated from vertex cuts and groupings of the leftover components.
std::vector<Separation> separations_of_order(const Graph& g, int k);

// 3-connected, |g| >= 5, and every 3-separation has exactly one side inducing
// K_{1,3}.
bool is_internally_4_connected(const Graph& g);

// Every 3-subset of vertices leaves at most two components. Requires a
// 3-connected input.
bool is_strongly_connected3(const Graph& g);

// Chosen side of a 3-separation with the three boundary vertices completed
// into a triangle (g_delta) or joined to one new vertex (g_y).
Graph g_delta(const Graph& g, const Separation& s, SeparationSide side);
Graph g_y(const Graph& g, const Separation& s, SeparationSide side);

}  // namespace apg
