#pragma once

#include <cstdint>
#include <vector>

#include "apg/graph.hpp"

// Test-only oracles, deliberately independent of the library's fast paths.
namespace apg::oracle {

// Pair-bit encoding of labeled graphs: bit index of {i,j}, i<j, in
// lexicographic order.
int pair_index(int n, int i, int j);
Graph graph_from_mask(int n, std::uint32_t mask);
std::uint32_t mask_from_graph(const Graph& g);

// Isomorphism-class count by sweeping permutation orbits of all labeled
// graphs (n <= 7; 2^21 masks at n=7).
std::uint64_t orbit_class_count(int n);

// Burnside count: average number of labeled graphs fixed per permutation.
std::uint64_t burnside_class_count(int n);

// Minimal labeled representative of every permutation orbit (n <= 6).
std::vector<std::uint32_t> orbit_representatives(int n);

// Exhaustive vertex-cut search.
int connectivity_by_cut_search(const Graph& g);

// Minor containment by enumerating families of disjoint connected branch
// sets over all subsets of the host (hosts of order <= 12 or so).
bool minor_by_partitions(const Graph& host, const Graph& pattern);

// Planarity by exhaustive search for K5/K33 subdivisions.
bool planar_by_subdivision_search(const Graph& g);

}  // namespace apg::oracle
