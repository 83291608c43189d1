#pragma once

#include <string>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

struct CanonResult {
    std::string form;            // complete isomorphism invariant, decodes back to the graph
    std::vector<int> labeling;   // labeling[original] = canonical position
};

// Canonical labeling by iterated color refinement with individualization.
// Optional initial colors constrain the search to color-preserving
// relabelings (the colors are appended to the form, so forms of colored
// graphs match iff a color-preserving isomorphism exists).
CanonResult canonical_labeling(const Graph& g, const std::vector<int>* initial_colors = nullptr);

std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// orbit[v] == orbit[w] iff some automorphism maps v to w.
// Orbit ids are dense, numbered by each orbit's least vertex.
std::vector<int> automorphism_orbits(const Graph& g);

}  // namespace apg
