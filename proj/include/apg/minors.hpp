#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

// Witness for pattern <= host in the minor order: disjoint connected branch
// sets, one per pattern vertex, plus one host edge per pattern edge.
struct MinorModel {
    std::vector<VertexSet> branch_sets;               // indexed by pattern vertex
    std::vector<std::pair<Edge, Edge>> edge_witness;  // (pattern edge, host edge)
};

struct MinorSearchLimits {
    int max_pattern_order = 10;
};

// Thread-safe get-or-compute store keyed by canonical forms; results are held
// in canonical coordinates and remapped per query, so hits stay valid models.
class MinorCache {
public:
    std::optional<std::optional<MinorModel>> lookup(const std::string& host_key,
                                                    const std::string& pattern_key) const;
    void store(const std::string& host_key, const std::string& pattern_key,
               const std::optional<MinorModel>& result);
    std::optional<std::vector<int>> lookup_orbit_reps(const std::string& host_key) const;
    void store_orbit_reps(const std::string& host_key, const std::vector<int>& reps);

private:
    mutable std::mutex mu_;
    std::map<std::pair<std::string, std::string>, std::optional<MinorModel>> results_;
    std::map<std::string, std::vector<int>> orbit_reps_;
};

// Exact minor containment by backtracking assignment of pattern vertices to
// host branch sets, growing sets to restore required adjacencies. Patterns may
// be disconnected (the obstruction sets need disjoint-edge patterns).
std::optional<MinorModel> has_minor(const Graph& host, const Graph& pattern,
                                    MinorCache* cache = nullptr,
                                    const MinorSearchLimits& limits = {});

bool verify_model(const Graph& host, const Graph& pattern, const MinorModel& m,
                  std::string* reason = nullptr);

// First pattern contained in g as a minor, cheapest (fewest edges) patterns
// tried first. Absent iff g is free of all of them.
std::optional<std::pair<int, MinorModel>> free_of(const Graph& g,
                                                  const std::vector<Graph>& patterns,
                                                  MinorCache* cache = nullptr);

// Subdivision witness: branch vertices plus internally disjoint arcs.
struct SubdivisionWitness {
    std::vector<Edge> edges;     // host edges of the subdivision
    std::vector<int> branch_map;  // pattern vertex -> host branch vertex
};

// Exact subdivision containment. For cubic patterns this coincides with minor
// containment; in general "present" is sound and "absent" only rules out a
// subdivision.
std::optional<SubdivisionWitness> has_topological_minor(const Graph& host, const Graph& pattern);

}  // namespace apg
