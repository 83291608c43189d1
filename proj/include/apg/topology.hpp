#pragma once

#include <map>
#include <variant>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

// Result of suppressing all degree-2 vertices. `core_to_input` maps core ids
// back to input ids; `path_map` lists, per core edge, the suppressed input
// vertices in order from the smaller core endpoint's input vertex to the
// larger's. Expanding every core edge by its path reproduces the input.
struct TopologicalCore {
    Graph core;
    std::vector<int> core_to_input;
    std::map<Edge, std::vector<int>> path_map;
};

enum class SuppressErrorKind {
    NotConnected,
    DegreeOneVertex,
    CycleInput,
    ParallelEdgeCollision,
};

struct SuppressError {
    SuppressErrorKind kind;
    int vertex = -1;  // blocking vertex where applicable
};

using SuppressOutcome = std::variant<TopologicalCore, SuppressError>;

// Repeatedly replaces a degree-2 vertex and its two edges by one edge joining
// its neighbors. Requires a connected non-cycle input of minimum degree 2;
// fails on a suppression that would create a parallel edge (the input is then
// not a subdivision of a simple graph of minimum degree 3).
SuppressOutcome suppress_degree2(const Graph& g);

// Rebuilds the subdivision described by a core: every core edge is expanded
// into a path through fresh vertices of the recorded length. Vertex ids of the
// result are the core's followed by the subdivision vertices in path order.
Graph expand_core(const TopologicalCore& core);

}  // namespace apg
