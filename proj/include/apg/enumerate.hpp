#pragma once

#include <cstdint>
#include <functional>

#include "apg/graph.hpp"

namespace apg {

using GraphVisitor = std::function<void(const Graph&)>;
using GraphPredicate = std::function<bool(const Graph&)>;

struct EnumerateOptions {
    int max_order = 10;
};

// Visits exactly one representative per isomorphism class of simple graphs on
// n vertices satisfying `filter` (empty filter accepts all). Generation grows
// vertex-extension levels with canonical-form dedup, so it is isomorph-free.
// Returns the number of graphs visited. Refuses n beyond options.max_order.
std::uint64_t enumerate_graphs(int n, const GraphVisitor& visit,
                               const GraphPredicate& filter = nullptr,
                               const EnumerateOptions& options = {});

}  // namespace apg
