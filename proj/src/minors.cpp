#include "apg/minors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "apg/canonical.hpp"

namespace apg {

namespace {

constexpr int kOrbitHostThreshold = 12;

struct MinorSearch {
    const Graph& host;
    const Graph& pat;
    int k;
    int n;
    std::vector<int> order;          // pattern vertices, descending degree
    std::vector<Edge> pat_edges;
    std::vector<VertexSet> branch;   // by pattern vertex; 0 = unplaced
    VertexSet used = 0;
    VertexSet all;
    std::vector<int> first_roots;

    MinorSearch(const Graph& h, const Graph& p) : host(h), pat(p), k(p.order()), n(h.order()) {
        order.resize(k);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return pat.degree(a) > pat.degree(b); });
        pat_edges = pat.edges();
        branch.assign(k, 0);
        all = host.vertex_mask();
    }

    VertexSet nbrs(VertexSet s) const {
        VertexSet out = 0;
        for (int v : VsRange(s)) out |= host.neighbors(v);
        return out;
    }

    bool adjacent_sets(VertexSet a, VertexSet b) const {
        for (int v : VsRange(a))
            if ((host.neighbors(v) & b) != 0) return true;
        return false;
    }

    // free vertices reachable from the free neighborhood of s
    VertexSet free_reach(VertexSet s, VertexSet free) const {
        VertexSet reach = nbrs(s) & free, frontier = reach;
        while (frontier != 0) {
            VertexSet next = nbrs(frontier) & free & ~reach;
            reach |= next;
            frontier = next;
        }
        return reach;
    }

    bool solve(int placed, std::optional<MinorModel>& out) {
        VertexSet free = all & ~used;
        if (vs_count(free) < k - placed) return false;

        // pattern edges with both ends placed but no crossing host edge yet
        struct Unsat {
            int p, q;
            VertexSet cand_p, cand_q;
        };
        std::optional<Unsat> pick;
        std::size_t pick_width = SIZE_MAX;
        for (const Edge& e : pat_edges) {
            if (branch[e.u] == 0 || branch[e.v] == 0) continue;
            if (adjacent_sets(branch[e.u], branch[e.v])) continue;
            VertexSet reach_q = free_reach(branch[e.v], free);
            VertexSet cand_p = nbrs(branch[e.u]) & reach_q;
            if (cand_p == 0) return false;  // no free route can realize this edge
            VertexSet reach_p = free_reach(branch[e.u], free);
            VertexSet cand_q = nbrs(branch[e.v]) & reach_p;
            std::size_t width = static_cast<std::size_t>(vs_count(cand_p) + vs_count(cand_q));
            if (width < pick_width) {
                pick_width = width;
                pick = Unsat{e.u, e.v, cand_p, cand_q};
            }
        }

        if (pick) {
            for (int v : VsRange(pick->cand_p)) {
                branch[pick->p] |= vs_bit(v);
                used |= vs_bit(v);
                if (solve(placed, out)) return true;
                branch[pick->p] &= ~vs_bit(v);
                used &= ~vs_bit(v);
            }
            for (int u : VsRange(pick->cand_q)) {
                branch[pick->q] |= vs_bit(u);
                used |= vs_bit(u);
                if (solve(placed, out)) return true;
                branch[pick->q] &= ~vs_bit(u);
                used &= ~vs_bit(u);
            }
            return false;
        }

        if (placed == k) {
            extract(out);
            return true;
        }

        int p = order[placed];
        // try roots adjacent to placed pattern-neighbors first
        VertexSet want = 0;
        for (int q : VsRange(pat.neighbors(p)))
            if (branch[q] != 0) want |= nbrs(branch[q]);
        std::vector<int> roots;
        if (placed == 0 && !first_roots.empty()) {
            roots = first_roots;
        } else {
            for (int v : VsRange(free & want)) roots.push_back(v);
            for (int v : VsRange(free & ~want)) roots.push_back(v);
        }
        for (int r : roots) {
            if (!vs_test(free, r)) continue;
            branch[p] = vs_bit(r);
            used |= vs_bit(r);
            if (solve(placed + 1, out)) return true;
            branch[p] = 0;
            used &= ~vs_bit(r);
        }
        return false;
    }

    void extract(std::optional<MinorModel>& out) const {
        MinorModel m;
        m.branch_sets = branch;
        for (const Edge& e : pat_edges) {
            for (int v : VsRange(branch[e.u])) {
                VertexSet hit = host.neighbors(v) & branch[e.v];
                if (hit != 0) {
                    m.edge_witness.emplace_back(e, Edge(v, vs_lowest(hit)));
                    break;
                }
            }
        }
        out = std::move(m);
    }
};

// minimum branch-set size able to expose `degree` boundary edges, using the
// top host degrees as an optimistic bound
int min_branch_size(int degree, const std::vector<int>& sorted_degrees) {
    int boundary = 0;
    for (std::size_t s = 1; s <= sorted_degrees.size(); ++s) {
        boundary += sorted_degrees[s - 1];
        int cap = boundary - 2 * (static_cast<int>(s) - 1);
        if (cap >= degree) return static_cast<int>(s);
    }
    return static_cast<int>(sorted_degrees.size()) + 1;  // impossible
}

MinorModel to_canonical_coords(const MinorModel& m, const CanonResult& hc, const CanonResult& pc) {
    MinorModel out;
    out.branch_sets.assign(m.branch_sets.size(), 0);
    for (std::size_t p = 0; p < m.branch_sets.size(); ++p) {
        VertexSet s = 0;
        for (int v : VsRange(m.branch_sets[p])) s |= vs_bit(hc.labeling[v]);
        out.branch_sets[pc.labeling[p]] = s;
    }
    for (const auto& [pe, he] : m.edge_witness)
        out.edge_witness.emplace_back(Edge(pc.labeling[pe.u], pc.labeling[pe.v]),
                                      Edge(hc.labeling[he.u], hc.labeling[he.v]));
    return out;
}

MinorModel from_canonical_coords(const MinorModel& m, const CanonResult& hc, const CanonResult& pc) {
    std::vector<int> hinv(hc.labeling.size()), pinv(pc.labeling.size());
    for (std::size_t v = 0; v < hc.labeling.size(); ++v) hinv[hc.labeling[v]] = static_cast<int>(v);
    for (std::size_t v = 0; v < pc.labeling.size(); ++v) pinv[pc.labeling[v]] = static_cast<int>(v);
    MinorModel out;
    out.branch_sets.assign(m.branch_sets.size(), 0);
    for (std::size_t p = 0; p < m.branch_sets.size(); ++p) {
        VertexSet s = 0;
        for (int v : VsRange(m.branch_sets[p])) s |= vs_bit(hinv[v]);
        out.branch_sets[pinv[p]] = s;
    }
    for (const auto& [pe, he] : m.edge_witness)
        out.edge_witness.emplace_back(Edge(pinv[pe.u], pinv[pe.v]), Edge(hinv[he.u], hinv[he.v]));
    return out;
}

}  // namespace

std::optional<std::optional<MinorModel>> MinorCache::lookup(const std::string& host_key,
                                                            const std::string& pattern_key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = results_.find({host_key, pattern_key});
    if (it == results_.end()) return std::nullopt;
    return it->second;
}

void MinorCache::store(const std::string& host_key, const std::string& pattern_key,
                       const std::optional<MinorModel>& result) {
    std::lock_guard<std::mutex> lock(mu_);
    results_.emplace(std::make_pair(host_key, pattern_key), result);
}

std::optional<std::vector<int>> MinorCache::lookup_orbit_reps(const std::string& host_key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = orbit_reps_.find(host_key);
    if (it == orbit_reps_.end()) return std::nullopt;
    return it->second;
}

void MinorCache::store_orbit_reps(const std::string& host_key, const std::vector<int>& reps) {
    std::lock_guard<std::mutex> lock(mu_);
    orbit_reps_.emplace(host_key, reps);
}

std::optional<MinorModel> has_minor(const Graph& host, const Graph& pattern, MinorCache* cache,
                                    const MinorSearchLimits& limits) {
    if (pattern.order() > limits.max_pattern_order)
        throw std::invalid_argument("has_minor: pattern order exceeds limit");
    if (pattern.order() == 0) return MinorModel{};
    if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;

    // boundary-capacity bound: disjoint branch sets must fit in the host
    std::vector<int> host_degrees(host.order());
    for (int v = 0; v < host.order(); ++v) host_degrees[v] = host.degree(v);
    std::sort(host_degrees.rbegin(), host_degrees.rend());
    long total = 0;
    for (int p = 0; p < pattern.order(); ++p) {
        int s = min_branch_size(pattern.degree(p), host_degrees);
        if (s > host.order()) return std::nullopt;
        total += s;
    }
    if (total > host.order()) return std::nullopt;

    std::optional<CanonResult> hc, pc;
    if (cache) {
        hc = canonical_labeling(host);
        pc = canonical_labeling(pattern);
        if (auto hit = cache->lookup(hc->form, pc->form)) {
            if (!hit->has_value()) return std::nullopt;
            return from_canonical_coords(**hit, *hc, *pc);
        }
    }

    MinorSearch search(host, pattern);
    if (host.order() >= kOrbitHostThreshold) {
        std::vector<int> reps;
        std::optional<std::vector<int>> cached =
            cache ? cache->lookup_orbit_reps(hc->form) : std::nullopt;
        if (cached) {
            std::vector<int> hinv(host.order());
            for (int v = 0; v < host.order(); ++v) hinv[hc->labeling[v]] = v;
            for (int rc : *cached) reps.push_back(hinv[rc]);
        } else {
            std::vector<int> orbit = automorphism_orbits(host);
            for (int v = 0; v < host.order(); ++v)
                if (orbit[v] == v) reps.push_back(v);
            if (cache) {
                std::vector<int> canon_reps;
                for (int r : reps) canon_reps.push_back(hc->labeling[r]);
                cache->store_orbit_reps(hc->form, canon_reps);
            }
        }
        search.first_roots = std::move(reps);
    }

    std::optional<MinorModel> out;
    search.solve(0, out);
    if (cache) {
        std::optional<MinorModel> canon =
            out ? std::optional<MinorModel>(to_canonical_coords(*out, *hc, *pc)) : std::nullopt;
        cache->store(hc->form, pc->form, canon);
    }
    return out;
}

bool verify_model(const Graph& host, const Graph& pattern, const MinorModel& m,
                  std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (static_cast<int>(m.branch_sets.size()) != pattern.order())
        return fail("branch set count mismatch");
    VertexSet seen = 0;
    for (int p = 0; p < pattern.order(); ++p) {
        VertexSet s = m.branch_sets[p];
        if (s == 0) return fail("empty branch set");
        if ((s & ~host.vertex_mask()) != 0) return fail("branch set leaves the host");
        if ((s & seen) != 0) return fail("branch sets overlap");
        seen |= s;
        if (components_within(host, s).size() != 1) return fail("branch set not connected");
    }
    std::vector<Edge> pe = pattern.edges();
    if (m.edge_witness.size() != pe.size()) return fail("edge witness count mismatch");
    std::set<Edge> claimed_pattern, claimed_host;
    for (const auto& [p_edge, h_edge] : m.edge_witness) {
        if (!std::binary_search(pe.begin(), pe.end(), p_edge))
            return fail("witness names a non-pattern edge");
        if (!claimed_pattern.insert(p_edge).second) return fail("pattern edge witnessed twice");
        if (!host.has_edge(h_edge.u, h_edge.v)) return fail("witness edge not in host");
        if (!claimed_host.insert(h_edge).second) return fail("edge witness not injective");
        VertexSet bu = m.branch_sets[p_edge.u], bv = m.branch_sets[p_edge.v];
        bool straight = vs_test(bu, h_edge.u) && vs_test(bv, h_edge.v);
        bool flipped = vs_test(bu, h_edge.v) && vs_test(bv, h_edge.u);
        if (!straight && !flipped) return fail("witness edge misses its branch sets");
    }
    return true;
}

std::optional<std::pair<int, MinorModel>> free_of(const Graph& g,
                                                  const std::vector<Graph>& patterns,
                                                  MinorCache* cache) {
    std::vector<int> idx(patterns.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return patterns[a].size() < patterns[b].size(); });
    for (int i : idx)
        if (auto m = has_minor(g, patterns[i], cache)) return std::make_pair(i, std::move(*m));
    return std::nullopt;
}

namespace {

struct TopoSearch {
    const Graph& host;
    const Graph& pat;
    std::vector<int> order;   // pattern vertices, descending degree
    std::vector<int> image;   // pattern vertex -> host vertex (-1 unset)
    VertexSet used = 0;       // branch images + arc interiors
    std::vector<Edge> pe;
    std::vector<std::vector<int>> arcs;  // interior vertices per routed edge

    explicit TopoSearch(const Graph& h, const Graph& p) : host(h), pat(p) {
        order.resize(p.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return pat.degree(a) > pat.degree(b); });
        image.assign(p.order(), -1);
        pe = p.edges();
        arcs.resize(pe.size());
    }

    bool place(std::size_t i) {
        if (i == order.size()) return route(0);
        int p = order[i];
        for (int v = 0; v < host.order(); ++v) {
            if (vs_test(used, v) || host.degree(v) < pat.degree(p)) continue;
            image[p] = v;
            used |= vs_bit(v);
            if (place(i + 1)) return true;
            image[p] = -1;
            used &= ~vs_bit(v);
        }
        return false;
    }

    bool route(std::size_t e) {
        if (e == pe.size()) return true;
        int s = image[pe[e].u], t = image[pe[e].v];
        std::vector<int> path;
        return dfs_path(s, t, vs_bit(s), path, e);
    }

    bool dfs_path(int at, int t, VertexSet on_path, std::vector<int>& interior, std::size_t e) {
        if (host.has_edge(at, t)) {
            arcs[e] = interior;
            for (int v : interior) used |= vs_bit(v);
            if (route(e + 1)) return true;
            for (int v : interior) used &= ~vs_bit(v);
        }
        for (int v : VsRange(host.neighbors(at) & ~used & ~on_path)) {
            interior.push_back(v);
            if (dfs_path(v, t, on_path | vs_bit(v), interior, e)) return true;
            interior.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<SubdivisionWitness> has_topological_minor(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
    TopoSearch ts(host, pattern);
    if (!ts.place(0)) return std::nullopt;
    SubdivisionWitness w;
    w.branch_map = ts.image;
    for (std::size_t e = 0; e < ts.pe.size(); ++e) {
        int prev = ts.image[ts.pe[e].u];
        for (int v : ts.arcs[e]) {
            w.edges.emplace_back(prev, v);
            prev = v;
        }
        w.edges.emplace_back(prev, ts.image[ts.pe[e].v]);
    }
    std::sort(w.edges.begin(), w.edges.end());
    return w;
}

}  // namespace apg
