#include "apg/canonical.hpp"

#include <algorithm>
#include <map>

namespace apg {

namespace {

// Equitable refinement. Colors are consecutive ints ordered canonically:
// each round recolors by (old color, sorted neighbor colors), so the cell
// order depends only on the isomorphism type and the input coloring.
void refine(const Graph& g, std::vector<int>& color) {
    int n = g.order();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            for (int w : VsRange(g.neighbors(v))) s.push_back(color[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        int classes = 0;
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sorted) {
            auto [it, fresh] = rank.emplace(s, classes);
            if (fresh) ++classes;
        }
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = rank[sig[v].first];
            if (c != color[v]) changed = true;
            color[v] = c;
        }
        if (!changed) return;
    }
}

std::string encode_leaf(const Graph& g, const std::vector<int>& pos,
                        const std::vector<int>* initial_colors) {
    int n = g.order();
    std::vector<int> orig(n);
    for (int v = 0; v < n; ++v) orig[pos[v]] = v;
    std::string out;
    out.push_back(static_cast<char>(n));
    int byte = 0, filled = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            byte = (byte << 1) | (g.has_edge(orig[i], orig[j]) ? 1 : 0);
            if (++filled == 8) {
                out.push_back(static_cast<char>(byte));
                byte = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(byte << (8 - filled)));
    if (initial_colors)
        for (int i = 0; i < n; ++i) out.push_back(static_cast<char>((*initial_colors)[orig[i]]));
    return out;
}

struct Search {
    const Graph& g;
    const std::vector<int>* initial_colors;
    std::string best;
    std::vector<int> best_labeling;
    bool have_best = false;

    // Vertices u,w are interchangeable twins when swapping them is an
    // automorphism; a cell of mutual twins needs only one branch.
    bool all_twins(const std::vector<int>& cell) const {
        int a = cell[0];
        for (std::size_t i = 1; i < cell.size(); ++i) {
            int b = cell[i];
            VertexSet na = g.neighbors(a) & ~vs_bit(b);
            VertexSet nb = g.neighbors(b) & ~vs_bit(a);
            if (na != nb) return false;
        }
        return true;
    }

    void run(std::vector<int> color) {
        refine(g, color);
        int n = g.order();
        int classes = n == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        if (classes == n) {
            std::string leaf = encode_leaf(g, color, initial_colors);
            if (!have_best || leaf < best) {
                best = std::move(leaf);
                best_labeling = color;
                have_best = true;
            }
            return;
        }
        // smallest non-singleton cell by color value
        std::vector<int> count(classes, 0);
        for (int v = 0; v < n; ++v) ++count[color[v]];
        int target = 0;
        while (count[target] < 2) ++target;
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (color[v] == target) cell.push_back(v);

        std::size_t branches = all_twins(cell) ? 1 : cell.size();
        for (std::size_t i = 0; i < branches; ++i) {
            std::vector<int> child = color;
            for (int v = 0; v < n; ++v)
                if (child[v] >= target && v != cell[i]) ++child[v];
            run(std::move(child));
        }
    }
};

}  // namespace

CanonResult canonical_labeling(const Graph& g, const std::vector<int>* initial_colors) {
    int n = g.order();
    if (n == 0) return {std::string(1, '\0'), {}};
    std::vector<int> color(n, 0);
    if (initial_colors) {
        if (static_cast<int>(initial_colors->size()) != n)
            throw std::invalid_argument("canonical_labeling: color count mismatch");
        // normalize to dense values preserving order
        std::vector<int> vals = *initial_colors;
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(
                std::lower_bound(vals.begin(), vals.end(), (*initial_colors)[v]) - vals.begin());
    }
    Search s{g, initial_colors, {}, {}};
    s.run(std::move(color));
    return {std::move(s.best), std::move(s.best_labeling)};
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<int> automorphism_orbits(const Graph& g) {
    int n = g.order();
    std::vector<int> orbit(n, -1);
    std::map<std::string, int> seen;
    for (int v = 0; v < n; ++v) {
        std::vector<int> colors(n, 0);
        colors[v] = 1;
        std::string form = canonical_labeling(g, &colors).form;
        auto [it, fresh] = seen.emplace(std::move(form), v);
        orbit[v] = it->second;
    }
    return orbit;
}

}  // namespace apg
