#include "apg/enumerate.hpp"

#include <set>
#include <vector>

#include "apg/canonical.hpp"

namespace apg {

std::uint64_t enumerate_graphs(int n, const GraphVisitor& visit, const GraphPredicate& filter,
                               const EnumerateOptions& options) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: n must be positive");
    if (n > options.max_order)
        throw std::invalid_argument("enumerate_graphs: n=" + std::to_string(n) +
                                    " exceeds the configured maximum " +
                                    std::to_string(options.max_order));

    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const Graph& parent : level) {
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                Graph child(k);
                for (const Edge& e : parent.edges()) child.add_edge(e.u, e.v);
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1) child.add_edge(v, k - 1);
                if (seen.insert(canonical_form(child)).second) next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }

    std::uint64_t count = 0;
    for (const Graph& g : level) {
        if (filter && !filter(g)) continue;
        ++count;
        visit(g);
    }
    return count;
}

}  // namespace apg
