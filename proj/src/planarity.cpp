#include "apg/planarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "apg/canonical.hpp"
#include "apg/topology.hpp"

namespace apg {

namespace {

std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
    int n = g.order();
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        num[v] = low[v] = timer++;
        for (int w : VsRange(g.neighbors(v))) {
            if (num[w] == -1) {
                stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    std::vector<Edge> blk;
                    Edge top(v, w);
                    for (;;) {
                        Edge e = stack.back();
                        stack.pop_back();
                        blk.push_back(e);
                        if (e == top) break;
                    }
                    blocks.push_back(std::move(blk));
                }
            } else if (w != parent && num[w] < num[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], num[w]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (num[s] == -1) dfs(s, -1);
    return blocks;
}

// One step of the face-insertion planarity algorithm: fragments of the block
// relative to the embedded subgraph, each needing a face containing all its
// attachments. A fragment admitting no face proves nonplanarity; otherwise a
// path through a fragment with the fewest admissible faces is embedded.
struct BlockEmbedder {
    int n;
    std::vector<VertexSet> adj;        // block adjacency
    VertexSet verts = 0;               // block vertex set
    std::vector<VertexSet> emb;        // embedded adjacency
    VertexSet vh = 0;                  // embedded vertices
    std::vector<std::vector<int>> faces;

    explicit BlockEmbedder(int order, const std::vector<Edge>& edges) : n(order), adj(order, 0), emb(order, 0) {
        for (const Edge& e : edges) {
            adj[e.u] |= vs_bit(e.v);
            adj[e.v] |= vs_bit(e.u);
            verts |= vs_bit(e.u) | vs_bit(e.v);
        }
    }

    std::vector<int> initial_cycle() const {
        int start = vs_lowest(verts);
        std::vector<int> parent(n, -1), order;
        std::vector<char> seen(n, 0);
        std::function<std::vector<int>(int)> dfs = [&](int v) -> std::vector<int> {
            seen[v] = 1;
            for (int w : VsRange(adj[v])) {
                if (!seen[w]) {
                    parent[w] = v;
                    std::vector<int> c = dfs(w);
                    if (!c.empty()) return c;
                } else if (w != parent[v] && vs_test(vh_path_marker_, w)) {
                    // back edge to an active ancestor: cycle w..v
                    std::vector<int> cycle;
                    for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
                    cycle.push_back(w);
                    return cycle;
                }
            }
            vh_path_marker_ &= ~vs_bit(v);
            return {};
        };
        vh_path_marker_ = verts;
        std::vector<int> c = dfs(start);
        if (c.empty()) throw std::logic_error("biconnected block without a cycle");
        return c;
    }

    mutable VertexSet vh_path_marker_ = 0;

    void embed_cycle(const std::vector<int>& cycle) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
            emb[a] |= vs_bit(b);
            emb[b] |= vs_bit(a);
            vh |= vs_bit(a);
        }
        faces.push_back(cycle);
        faces.emplace_back(cycle.rbegin(), cycle.rend());
    }

    struct Fragment {
        VertexSet attachments = 0;
        VertexSet interior = 0;  // empty for a chord fragment
        Edge chord{0, 1};
        bool is_chord = false;
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        for (int u : VsRange(vh))
            for (int v : VsRange(adj[u] & vh & ~emb[u]))
                if (v > u) {
                    Fragment f;
                    f.is_chord = true;
                    f.chord = Edge(u, v);
                    f.attachments = vs_bit(u) | vs_bit(v);
                    out.push_back(f);
                }
        for (VertexSet comp : components_mask(verts & ~vh)) {
            Fragment f;
            f.interior = comp;
            for (int v : VsRange(comp)) f.attachments |= adj[v] & vh;
            out.push_back(f);
        }
        return out;
    }

    std::vector<VertexSet> components_mask(VertexSet within) const {
        std::vector<VertexSet> out;
        VertexSet seen = 0;
        for (int s : VsRange(within)) {
            if (vs_test(seen, s)) continue;
            VertexSet comp = vs_bit(s), frontier = comp;
            while (frontier != 0) {
                VertexSet next = 0;
                for (int v : VsRange(frontier)) next |= adj[v] & within & ~comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push_back(comp);
        }
        return out;
    }

    static VertexSet face_mask(const std::vector<int>& face) {
        VertexSet m = 0;
        for (int v : face) m |= vs_bit(v);
        return m;
    }

    // Path through the fragment between two distinct attachments.
    std::vector<int> fragment_path(const Fragment& f) const {
        if (f.is_chord) return {f.chord.u, f.chord.v};
        int a = vs_lowest(f.attachments);
        std::vector<int> parent(n, -1);
        VertexSet reached = 0, frontier = 0;
        for (int x : VsRange(adj[a] & f.interior)) {
            parent[x] = a;
            frontier |= vs_bit(x);
        }
        reached = frontier;
        while (frontier != 0) {
            for (int x : VsRange(frontier)) {
                VertexSet exits = adj[x] & vh & ~vs_bit(a);
                if (exits != 0) {
                    int b = vs_lowest(exits);
                    std::vector<int> path{b};
                    for (int y = x; y != a; y = parent[y]) path.push_back(y);
                    path.push_back(a);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
            }
            VertexSet next = 0;
            for (int x : VsRange(frontier))
                for (int y : VsRange(adj[x] & f.interior & ~reached)) {
                    parent[y] = x;
                    next |= vs_bit(y);
                }
            reached |= next;
            frontier = next;
        }
        throw std::logic_error("fragment with a single attachment in a biconnected block");
    }

    void embed_path(const std::vector<int>& path, std::size_t face_index) {
        std::vector<int> face = faces[face_index];
        int a = path.front(), b = path.back();
        auto ipos = std::find(face.begin(), face.end(), a) - face.begin();
        auto jpos = std::find(face.begin(), face.end(), b) - face.begin();
        std::size_t m = face.size();
        std::vector<int> arc1, arc2;
        for (std::size_t t = ipos;; t = (t + 1) % m) {
            arc1.push_back(face[t]);
            if (t == static_cast<std::size_t>(jpos)) break;
        }
        for (std::size_t t = jpos;; t = (t + 1) % m) {
            arc2.push_back(face[t]);
            if (t == static_cast<std::size_t>(ipos)) break;
        }
        std::vector<int> interior(path.begin() + 1, path.end() - 1);
        std::vector<int> f1 = arc1;
        f1.insert(f1.end(), interior.rbegin(), interior.rend());
        std::vector<int> f2 = arc2;
        f2.insert(f2.end(), interior.begin(), interior.end());
        faces[face_index] = std::move(f1);
        faces.push_back(std::move(f2));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            emb[path[i]] |= vs_bit(path[i + 1]);
            emb[path[i + 1]] |= vs_bit(path[i]);
        }
        for (int v : interior) vh |= vs_bit(v);
    }

    bool run() {
        embed_cycle(initial_cycle());
        for (;;) {
            std::vector<Fragment> frags = fragments();
            if (frags.empty()) return true;
            std::vector<VertexSet> fmasks;
            fmasks.reserve(faces.size());
            for (const auto& f : faces) fmasks.push_back(face_mask(f));

            std::size_t best = 0, best_face = 0;
            std::size_t best_count = SIZE_MAX;
            for (std::size_t i = 0; i < frags.size(); ++i) {
                std::size_t count = 0, first = 0;
                for (std::size_t j = 0; j < fmasks.size(); ++j)
                    if ((frags[i].attachments & ~fmasks[j]) == 0) {
                        if (count == 0) first = j;
                        ++count;
                    }
                if (count == 0) return false;
                if (count < best_count) {
                    best = i;
                    best_count = count;
                    best_face = first;
                }
                if (best_count == 1) break;  // forced fragment, embed it now
            }
            embed_path(fragment_path(frags[best]), best_face);
        }
    }

    // Rotation extraction: the successor of out-dart (v,w) is the dart that
    // follows (w,v) in its face walk.
    void append_rotations(std::vector<std::vector<int>>& rot) const {
        std::map<std::pair<int, int>, std::pair<int, int>> next_in_face;
        for (const auto& face : faces) {
            std::size_t m = face.size();
            for (std::size_t i = 0; i < m; ++i) {
                auto d = std::make_pair(face[i], face[(i + 1) % m]);
                auto dn = std::make_pair(face[(i + 1) % m], face[(i + 2) % m]);
                next_in_face[d] = dn;
            }
        }
        for (int v : VsRange(vh)) {
            int deg = vs_count(emb[v]);
            std::vector<int> cycle;
            int w = vs_lowest(emb[v]);
            for (int i = 0; i < deg; ++i) {
                cycle.push_back(w);
                w = next_in_face.at({w, v}).second;
            }
            if (w != cycle.front() || static_cast<int>(cycle.size()) != deg)
                throw std::logic_error("embedding rotation is not a single cycle");
            rot[v].insert(rot[v].end(), cycle.begin(), cycle.end());
        }
    }
};

bool embed_graph(const Graph& g, RotationSystem* rot) {
    if (rot) rot->assign(g.order(), {});
    for (const std::vector<Edge>& block : biconnected_blocks(g)) {
        if (block.size() == 1) {
            if (rot) {
                (*rot)[block[0].u].push_back(block[0].v);
                (*rot)[block[0].v].push_back(block[0].u);
            }
            continue;
        }
        BlockEmbedder be(g.order(), block);
        if (!be.run()) return false;
        if (rot) be.append_rotations(*rot);
    }
    return true;
}

KuratowskiWitness extract_kuratowski(const Graph& g) {
    Graph residual = g;
    for (const Edge& e : g.edges()) {
        Graph trial = delete_edge(residual, e);
        if (!planar_bool(trial)) residual = std::move(trial);
    }
    KuratowskiWitness w;
    w.edges = residual.edges();
    for (int v = 0; v < residual.order(); ++v)
        if (residual.degree(v) >= 3) w.branch_vertices.push_back(v);

    VertexSet support = 0;
    for (const Edge& e : w.edges) support |= vs_bit(e.u) | vs_bit(e.v);
    SuppressOutcome core = suppress_degree2(induced_subgraph(residual, support));
    const auto* tc = std::get_if<TopologicalCore>(&core);
    if (!tc) throw std::logic_error("stripping residue is not a subdivision");
    if (tc->core.order() == 5) {
        w.tag = KuratowskiTag::K5;
    } else if (tc->core.order() == 6) {
        w.tag = KuratowskiTag::K33;
    } else {
        throw std::logic_error("stripping residue core has unexpected order");
    }
    return w;
}

int pos_of(const std::vector<int>& rot, int x) {
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == x) return static_cast<int>(i);
    return -1;
}

bool fail(std::string* reason, const std::string& why) {
    if (reason) *reason = why;
    return false;
}

}  // namespace

bool planar_bool(const Graph& g) { return embed_graph(g, nullptr); }

PlanarityResult is_planar(const Graph& g) {
    PlanarityResult r;
    RotationSystem rot;
    if (embed_graph(g, &rot)) {
        r.planar = true;
        r.certificate.planar = true;
        r.certificate.rotation = std::move(rot);
    } else {
        r.planar = false;
        r.certificate.planar = false;
        r.certificate.kuratowski = extract_kuratowski(g);
    }
    return r;
}

int embedding_face_count(const Graph& g, const RotationSystem& rotation) {
    int n = g.order();
    std::set<std::pair<int, int>> seen;
    int faces = 0;
    for (int v = 0; v < n; ++v) {
        for (int w : rotation[v]) {
            if (seen.count({v, w})) continue;
            ++faces;
            int a = v, b = w;
            while (!seen.count({a, b})) {
                seen.insert({a, b});
                int p = pos_of(rotation[b], a);
                int c = rotation[b][(p + 1) % rotation[b].size()];
                a = b;
                b = c;
            }
        }
    }
    int c = static_cast<int>(components(g).size());
    int isolated = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) ++isolated;
    // each edgeless component traces no dart cycle but bounds one face
    faces += isolated;
    // the per-component traces each count an outer face; drawn together they share one
    return faces - std::max(0, c - 1);
}

bool verify_certificate(const Graph& g, const PlanarityCertificate& c, std::string* reason) {
    if (c.planar) {
        const RotationSystem& rot = c.rotation;
        if (static_cast<int>(rot.size()) != g.order())
            return fail(reason, "rotation size mismatch");
        for (int v = 0; v < g.order(); ++v) {
            VertexSet listed = 0;
            for (int w : rot[v]) {
                if (w < 0 || w >= g.order() || !g.has_edge(v, w))
                    return fail(reason, "rotation lists a non-edge");
                if (vs_test(listed, w)) return fail(reason, "rotation repeats a neighbor");
                listed |= vs_bit(w);
            }
            if (listed != g.neighbors(v)) return fail(reason, "rotation misses a neighbor");
        }
        int f = embedding_face_count(g, rot);
        int comps = static_cast<int>(components(g).size());
        if (g.order() - g.size() + f != 1 + comps)
            return fail(reason, "face count violates Euler's formula");
        return true;
    }

    const KuratowskiWitness& w = c.kuratowski;
    if (w.edges.empty()) return fail(reason, "empty kuratowski edge set");
    std::set<Edge> edgeset;
    Graph sub(g.order());
    for (const Edge& e : w.edges) {
        if (!g.has_edge(e.u, e.v)) return fail(reason, "kuratowski edge not in graph");
        if (!edgeset.insert(e).second) return fail(reason, "kuratowski edge repeated");
        sub.add_edge(e.u, e.v);
    }
    std::vector<int> expect_branch;
    for (int v = 0; v < g.order(); ++v)
        if (sub.degree(v) >= 3) expect_branch.push_back(v);
    std::vector<int> claimed = w.branch_vertices;
    std::sort(claimed.begin(), claimed.end());
    if (claimed != expect_branch) return fail(reason, "branch vertex list mismatch");
    int want_degree = w.tag == KuratowskiTag::K5 ? 4 : 3;
    for (int v : expect_branch)
        if (sub.degree(v) != want_degree) return fail(reason, "branch vertex degree mismatch");

    VertexSet support = 0;
    for (const Edge& e : w.edges) support |= vs_bit(e.u) | vs_bit(e.v);
    SuppressOutcome core = suppress_degree2(induced_subgraph(sub, support));
    const auto* tc = std::get_if<TopologicalCore>(&core);
    if (!tc) return fail(reason, "kuratowski edges are not a subdivision");
    Graph want = w.tag == KuratowskiTag::K5 ? Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})
                                            : Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    if (!is_isomorphic(tc->core, want)) return fail(reason, "core does not match the tag");
    return true;
}

std::vector<Edge> deletion_planar_set(const Graph& g) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (planar_bool(delete_edge(g, e))) out.push_back(e);
    return out;
}

std::vector<Edge> contraction_planar_set(const Graph& g) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (planar_bool(contract_edge(g, e))) out.push_back(e);
    return out;
}

}  // namespace apg
