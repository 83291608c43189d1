#include "apg/recognition.hpp"

#include <algorithm>
#include <set>

#include "apg/canonical.hpp"
#include "apg/connectivity.hpp"

namespace apg {

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Planar: return "planar";
        case GraphClass::AlmostPlanar: return "almost-planar";
        case GraphClass::Neither: return "neither";
    }
    return "?";
}

std::string to_string(FamilyTag t) {
    switch (t) {
        case FamilyTag::DoubleWheel: return "DoubleWheel";
        case FamilyTag::MobiusLadder: return "MobiusLadder";
        case FamilyTag::WClass: return "WClass";
    }
    return "?";
}

std::vector<EdgeFate> edge_fate_table(const Graph& g) {
    std::vector<EdgeFate> table;
    for (const Edge& e : g.edges())
        table.push_back({e, planar_bool(delete_edge(g, e)), planar_bool(contract_edge(g, e))});
    return table;
}

namespace {

std::optional<NeitherEvidence> find_failing_edge(const Graph& g) {
    for (const Edge& e : g.edges()) {
        Graph del = delete_edge(g, e);
        Graph con = contract_edge(g, e);
        if (!planar_bool(del) && !planar_bool(con)) {
            NeitherEvidence ev;
            ev.failing_edge = e;
            ev.delete_cert = is_planar(del).certificate;
            ev.contract_cert = is_planar(con).certificate;
            return ev;
        }
    }
    return std::nullopt;
}

}  // namespace

Verdict decide_by_definition(const Graph& g) {
    Verdict v;
    PlanarityResult pr = is_planar(g);
    if (pr.planar) {
        v.cls = GraphClass::Planar;
        v.planar_cert = std::move(pr.certificate);
        return v;
    }
    v.edge_table = edge_fate_table(g);
    bool all_pass = true;
    for (const EdgeFate& f : v.edge_table)
        if (!f.delete_planar && !f.contract_planar) all_pass = false;
    if (all_pass) {
        v.cls = GraphClass::AlmostPlanar;
        return v;
    }
    v.cls = GraphClass::Neither;
    v.neither = find_failing_edge(g);
    return v;
}

Verdict decide_by_obstructions(const Graph& g, const RecognitionOptions& options) {
    Verdict v;
    PlanarityResult pr = is_planar(g);
    if (pr.planar) {
        v.cls = GraphClass::Planar;
        v.planar_cert = std::move(pr.certificate);
        return v;
    }

    auto query = [&](const std::vector<NamedGraph>& named,
                     const std::string& set_name) -> std::optional<ObstructionHit> {
        std::vector<Graph> graphs;
        for (const NamedGraph& ng : named) graphs.push_back(ng.graph);
        auto hit = free_of(g, graphs, options.cache);
        if (!hit) return std::nullopt;
        return ObstructionHit{set_name, named[hit->first].name, named[hit->first].graph,
                              std::move(hit->second)};
    };

    std::optional<ObstructionHit> hit;
    bool contained = false;
    if (options.set_mode == ObstructionSetMode::FOnly) {
        hit = query(obstruction_set_F(), "F");
        contained = hit.has_value();
    } else {
        auto hit_fprime = query(obstruction_set_Fprime(), "F'");
        contained = hit_fprime.has_value();
        hit = std::move(hit_fprime);
        if (options.set_mode == ObstructionSetMode::Auto && is_three_connected(g)) {
            auto hit_f = query(obstruction_set_F(), "F");
            v.f_fprime_agree = hit_f.has_value() == contained;
        }
    }

    if (!contained) {
        v.cls = GraphClass::AlmostPlanar;
        v.edge_table = edge_fate_table(g);
    } else {
        v.cls = GraphClass::Neither;
        v.obstruction = std::move(hit);
        v.neither = find_failing_edge(g);
    }
    return v;
}

namespace {

bool is_apex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (planar_bool(delete_vertex(g, v))) return true;
    return false;
}

std::optional<FamilyWitness> scan_family(const Graph& g, FamilyTag tag, int bound,
                                         Graph (*make)(int), MinorCache* cache) {
    if (bound < 3) return std::nullopt;
    // members grow in the minor order, so one check at the bound settles absence
    if (!has_minor(make(bound), g, cache)) return std::nullopt;
    for (int k = 3; k <= bound; ++k) {
        if (auto m = has_minor(make(k), g, cache)) {
            FamilyWitness w;
            w.tag = tag;
            w.parameter = k;
            w.member = make(k);
            w.embedding = std::move(*m);
            return w;
        }
    }
    return std::nullopt;
}

std::vector<HubPlacement> allowed_placements(int rim) {
    std::vector<HubPlacement> out{HubPlacement::Slot0, HubPlacement::Slot1, HubPlacement::Slot2};
    if (rim == 3) out.push_back(HubPlacement::None);
    return out;
}

std::optional<FamilyWitness> scan_w_class(const Graph& g, int rim_bound, MinorCache* cache) {
    // Absence prescreen: with fixed slot placements, rims grow in the minor
    // order, and a rim-3 wheel placed off the triangle equals one placed on
    // it. So the three all-slots members with maximal rims dominate the space.
    const std::array<std::array<HubPlacement, 3>, 3> max_patterns{{
        {HubPlacement::Slot0, HubPlacement::Slot1, HubPlacement::Slot2},
        {HubPlacement::Slot0, HubPlacement::Slot0, HubPlacement::Slot1},
        {HubPlacement::Slot0, HubPlacement::Slot0, HubPlacement::Slot0},
    }};
    bool maybe = false;
    for (const auto& pat : max_patterns) {
        WClassSpec spec;
        for (int i = 0; i < 3; ++i) spec.wheels[i] = {rim_bound, pat[i]};
        if (has_minor(w_class(spec).graph, g, cache)) {
            maybe = true;
            break;
        }
    }
    if (!maybe) return std::nullopt;

    std::set<std::string> tried;
    for (int n1 = 3; n1 <= rim_bound; ++n1)
        for (int n2 = n1; n2 <= rim_bound; ++n2)
            for (int n3 = n2; n3 <= rim_bound; ++n3)
                for (HubPlacement p1 : allowed_placements(n1))
                    for (HubPlacement p2 : allowed_placements(n2))
                        for (HubPlacement p3 : allowed_placements(n3)) {
                            WClassSpec spec{{{{n1, p1}, {n2, p2}, {n3, p3}}}};
                            Graph member = w_class(spec).graph;
                            if (member.order() < g.order() || member.size() < g.size()) continue;
                            if (!tried.insert(canonical_form(member)).second) continue;
                            if (auto m = has_minor(member, g, cache)) {
                                FamilyWitness w;
                                w.tag = FamilyTag::WClass;
                                w.parameter = 0;
                                w.spec = spec;
                                w.member = std::move(member);
                                w.embedding = std::move(*m);
                                return w;
                            }
                        }
    return std::nullopt;
}

}  // namespace

std::optional<FamilyWitness> structural_witness_3conn(const Graph& g,
                                                      const RecognitionOptions& options) {
    if (planar_bool(g)) throw std::invalid_argument("structural_witness_3conn: planar input");
    if (!is_three_connected(g))
        throw std::invalid_argument("structural_witness_3conn: input not 3-connected");

    // every host family member is apex (one vertex whose removal leaves a
    // planar graph), so non-apex graphs are minors of none of them
    if (!is_apex(g)) return std::nullopt;

    int bound = options.structural_bound > 0 ? options.structural_bound : g.order() + g.size();
    if (auto w = scan_family(g, FamilyTag::DoubleWheel, bound, &double_wheel, options.cache))
        return w;
    if (auto w = scan_family(g, FamilyTag::MobiusLadder, bound, &mobius_ladder, options.cache))
        return w;
    return scan_w_class(g, std::max(3, g.order()), options.cache);
}

std::optional<DecompositionWitness> decompose_general(const Graph& g,
                                                      const RecognitionOptions& options) {
    (void)options;
    if (planar_bool(g)) throw std::invalid_argument("decompose_general: planar input");

    std::vector<int> isolated;
    VertexSet keep = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            isolated.push_back(v);
        else
            keep |= vs_bit(v);
    }
    Graph gstar = induced_subgraph(g, keep);
    if (!is_connected(gstar)) return std::nullopt;
    if (gstar.min_degree() < 2) return std::nullopt;

    SuppressOutcome sup = suppress_degree2(gstar);
    const auto* tc = std::get_if<TopologicalCore>(&sup);
    if (!tc) return std::nullopt;

    const Graph& core = tc->core;
    if (!is_three_connected(core)) return std::nullopt;
    Verdict core_verdict = decide_by_definition(core);
    if (core_verdict.cls != GraphClass::AlmostPlanar) return std::nullopt;

    std::vector<Edge> dset = deletion_planar_set(core);
    for (const auto& [e, chain] : tc->path_map)
        if (!chain.empty() && !std::binary_search(dset.begin(), dset.end(), e)) return std::nullopt;

    DecompositionWitness w;
    w.core = core;
    w.core_edge_table = std::move(core_verdict.edge_table);
    w.expansion = *tc;
    w.isolated_vertices = std::move(isolated);
    return w;
}

namespace {

bool fail(std::string* reason, const std::string& why) {
    if (reason) *reason = why;
    return false;
}

}  // namespace

bool verify_verdict(const Graph& g, const Verdict& v, std::string* reason) {
    switch (v.cls) {
        case GraphClass::Planar: {
            if (!v.planar_cert) return fail(reason, "planar verdict without embedding");
            if (!v.planar_cert->planar) return fail(reason, "planar verdict with nonplanar certificate");
            return verify_certificate(g, *v.planar_cert, reason);
        }
        case GraphClass::AlmostPlanar: {
            if (planar_bool(g)) return fail(reason, "almost-planar verdict on planar graph");
            std::vector<Edge> es = g.edges();
            if (v.edge_table.size() != es.size()) return fail(reason, "edge table incomplete");
            std::set<Edge> covered;
            for (const EdgeFate& f : v.edge_table) {
                if (!g.has_edge(f.e.u, f.e.v)) return fail(reason, "edge table names a non-edge");
                if (!covered.insert(f.e).second) return fail(reason, "edge table repeats an edge");
                if (f.delete_planar != planar_bool(delete_edge(g, f.e)))
                    return fail(reason, "edge table wrong about deletion");
                if (f.contract_planar != planar_bool(contract_edge(g, f.e)))
                    return fail(reason, "edge table wrong about contraction");
                if (!f.delete_planar && !f.contract_planar)
                    return fail(reason, "edge table contains a failing edge");
            }
            return true;
        }
        case GraphClass::Neither: {
            if (!v.neither) return fail(reason, "neither verdict without failing edge");
            const NeitherEvidence& ev = *v.neither;
            if (!g.has_edge(ev.failing_edge.u, ev.failing_edge.v))
                return fail(reason, "failing edge not in graph");
            Graph del = delete_edge(g, ev.failing_edge);
            Graph con = contract_edge(g, ev.failing_edge);
            if (ev.delete_cert.planar || ev.contract_cert.planar)
                return fail(reason, "neither evidence carries a planar certificate");
            if (!verify_certificate(del, ev.delete_cert, reason)) return false;
            if (!verify_certificate(con, ev.contract_cert, reason)) return false;
            if (v.obstruction &&
                !verify_model(g, v.obstruction->pattern, v.obstruction->model, reason))
                return false;
            return true;
        }
    }
    return fail(reason, "unknown class");
}

bool verify_family_witness(const Graph& g, const FamilyWitness& w, std::string* reason) {
    Graph member;
    switch (w.tag) {
        case FamilyTag::DoubleWheel: member = double_wheel(w.parameter); break;
        case FamilyTag::MobiusLadder: member = mobius_ladder(w.parameter); break;
        case FamilyTag::WClass: {
            if (!w.spec) return fail(reason, "wclass witness without spec");
            member = w_class(*w.spec).graph;
            break;
        }
    }
    if (!(member == w.member)) return fail(reason, "family member mismatch");
    return verify_model(w.member, g, w.embedding, reason);
}

bool verify_decomposition_witness(const Graph& g, const DecompositionWitness& w,
                                  std::string* reason) {
    VertexSet keep = 0;
    std::vector<int> isolated;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            isolated.push_back(v);
        else
            keep |= vs_bit(v);
    }
    if (isolated != w.isolated_vertices) return fail(reason, "isolated vertex list mismatch");
    Graph gstar = induced_subgraph(g, keep);

    // exact reconstruction of G* from the core and its subdivision paths
    if (!(w.expansion.core == w.core)) return fail(reason, "expansion core mismatch");
    if (static_cast<int>(w.expansion.core_to_input.size()) != w.core.order())
        return fail(reason, "core vertex map size mismatch");
    Graph rebuilt(gstar.order());
    std::set<Edge> core_edges;
    for (const Edge& e : w.core.edges()) core_edges.insert(e);
    for (const Edge& e : w.core.edges()) {
        auto it = w.expansion.path_map.find(e);
        int a = w.expansion.core_to_input[e.u];
        int b = w.expansion.core_to_input[e.v];
        if (it == w.expansion.path_map.end() || it->second.empty()) {
            rebuilt.add_edge(a, b);
            continue;
        }
        int prev = a;
        for (int x : it->second) {
            rebuilt.add_edge(prev, x);
            prev = x;
        }
        rebuilt.add_edge(prev, b);
    }
    for (const auto& [e, chain] : w.expansion.path_map)
        if (!core_edges.count(e)) return fail(reason, "path map names a non-core edge");
    if (!(rebuilt == gstar)) return fail(reason, "expansion does not rebuild the graph");

    if (!is_three_connected(w.core)) return fail(reason, "core not 3-connected");
    Verdict core_verdict = decide_by_definition(w.core);
    if (core_verdict.cls != GraphClass::AlmostPlanar)
        return fail(reason, "core not almost-planar");
    std::vector<Edge> dset = deletion_planar_set(w.core);
    for (const auto& [e, chain] : w.expansion.path_map)
        if (!chain.empty() && !std::binary_search(dset.begin(), dset.end(), e))
            return fail(reason, "subdivided edge whose deletion is nonplanar");
    return true;
}

CrossCheckRecord cross_check(const Graph& g, const RecognitionOptions& options) {
    CrossCheckRecord rec;
    rec.g6 = graph6_encode(g);
    rec.definition = decide_by_definition(g);
    rec.obstructions = decide_by_obstructions(g, options);
    rec.three_connected = is_three_connected(g);

    bool nonplanar = rec.definition.cls != GraphClass::Planar;
    if (nonplanar) {
        if (rec.three_connected) {
            rec.ran_structural = true;
            rec.family = structural_witness_3conn(g, options);
        }
        rec.ran_decomposition = true;
        rec.decomposition = decompose_general(g, options);
    }

    bool def_planar = rec.definition.cls == GraphClass::Planar;
    bool obs_planar = rec.obstructions.cls == GraphClass::Planar;
    rec.agree = def_planar == obs_planar;
    if (nonplanar && rec.agree) {
        bool ap = rec.definition.cls == GraphClass::AlmostPlanar;
        rec.agree = ap == (rec.obstructions.cls == GraphClass::AlmostPlanar);
        if (rec.obstructions.f_fprime_agree && !*rec.obstructions.f_fprime_agree)
            rec.agree = false;
        if (rec.ran_structural && rec.family.has_value() != ap) rec.agree = false;
        if (rec.ran_decomposition && rec.decomposition.has_value() != ap) rec.agree = false;
    }
    return rec;
}

LemmaMobiusReport verify_lemma_mobius_minors(int max_k) {
    LemmaMobiusReport report;
    std::set<std::string> seen;
    std::vector<Graph> frontier;
    for (int k = 3; k <= max_k; ++k) {
        Graph m = mobius_ladder(k);
        if (seen.insert(canonical_form(m)).second) frontier.push_back(m);
    }
    std::vector<Graph> all = frontier;
    // closure over single-step minors; children of planar graphs stay planar,
    // so only nonplanar graphs are expanded
    while (!frontier.empty()) {
        std::vector<Graph> next;
        for (const Graph& g : frontier) {
            std::vector<Graph> children;
            for (const Edge& e : g.edges()) {
                children.push_back(delete_edge(g, e));
                children.push_back(contract_edge(g, e));
            }
            for (int v = 0; v < g.order(); ++v) children.push_back(delete_vertex(g, v));
            for (Graph& c : children) {
                if (planar_bool(c)) continue;
                if (!seen.insert(canonical_form(c)).second) continue;
                next.push_back(c);
                all.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }

    for (const Graph& g : all) {
        if (!is_internally_4_connected(g)) continue;
        LemmaMobiusReport::Entry entry;
        entry.g6 = graph6_encode(g);
        int n = g.order();
        if (n % 2 == 0 && n >= 6 && is_isomorphic(g, mobius_ladder(n / 2)))
            entry.matched = "M:" + std::to_string(n / 2);
        else if (n % 2 == 1 && n >= 5 && is_isomorphic(g, squared_cycle(n)))
            entry.matched = "C2:" + std::to_string(n);
        if (entry.matched.empty()) report.violations.push_back(entry.g6);
        report.entries.push_back(std::move(entry));
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const auto& a, const auto& b) { return a.g6 < b.g6; });
    report.ok = report.violations.empty();
    return report;
}

}  // namespace apg
