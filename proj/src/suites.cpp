#include "apg/suites.hpp"

#include <algorithm>
#include <set>

#include "apg/canonical.hpp"
#include "apg/connectivity.hpp"
#include "apg/enumerate.hpp"
#include "apg/json_io.hpp"
#include "apg/parallel.hpp"
#include "apg/recognition.hpp"

namespace apg {

namespace {

void note(SuiteResult& r, const std::string& what) { r.violations.push_back(what); }

// cross-checks a batch in parallel, verifying every emitted certificate
void run_equivalence_batch(const std::vector<Graph>& graphs, const RecognitionOptions& ropt,
                           SuiteResult& result, const SuiteOptions& options) {
    std::vector<CrossCheckRecord> records(graphs.size());
    std::vector<std::string> problems(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) {
        const Graph& g = graphs[i];
        CrossCheckRecord rec = cross_check(g, ropt);
        std::string why;
        if (!rec.agree) problems[i] = rec.g6 + ": deciders disagree";
        else if (!verify_verdict(g, rec.definition, &why))
            problems[i] = rec.g6 + ": definition verdict rejected (" + why + ")";
        else if (!verify_verdict(g, rec.obstructions, &why))
            problems[i] = rec.g6 + ": obstruction verdict rejected (" + why + ")";
        else if (rec.family && !verify_family_witness(g, *rec.family, &why))
            problems[i] = rec.g6 + ": family witness rejected (" + why + ")";
        else if (rec.decomposition && !verify_decomposition_witness(g, *rec.decomposition, &why))
            problems[i] = rec.g6 + ": decomposition witness rejected (" + why + ")";
        records[i] = std::move(rec);
    });
    std::vector<std::size_t> order(records.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return records[a].g6 < records[b].g6; });
    for (std::size_t i : order) {
        if (options.emit) options.emit(record_to_json(records[i]).dump());
        if (!problems[i].empty()) note(result, problems[i]);
    }
    result.checked += graphs.size();
}

}  // namespace

SuiteResult run_thm1(const SuiteOptions& options) {
    SuiteResult result;
    result.name = "thm1";
    int max_n = options.max_n > 0 ? options.max_n : 8;
    MinorCache cache;
    RecognitionOptions ropt;
    ropt.structural_bound = options.structural_bound;
    ropt.cache = &cache;
    for (int n = 5; n <= max_n; ++n) {
        std::vector<Graph> batch;
        enumerate_graphs(n, [&](const Graph& g) { batch.push_back(g); },
                         [](const Graph& g) {
                             return is_three_connected(g) && !planar_bool(g);
                         });
        run_equivalence_batch(batch, ropt, result, options);
    }
    return result;
}

SuiteResult run_thm4(const SuiteOptions& options) {
    SuiteResult result;
    result.name = "thm4";
    int max_n = options.max_n > 0 ? options.max_n : 7;
    MinorCache cache;
    RecognitionOptions ropt;
    ropt.structural_bound = options.structural_bound;
    ropt.cache = &cache;
    for (int n = 5; n <= max_n; ++n) {
        std::vector<Graph> batch;
        enumerate_graphs(n, [&](const Graph& g) { batch.push_back(g); },
                         [](const Graph& g) { return !planar_bool(g); });
        run_equivalence_batch(batch, ropt, result, options);
    }
    return result;
}

SuiteResult run_lemma_mobius(const SuiteOptions& options) {
    SuiteResult result;
    result.name = "lemma-mobius";
    int max_k = options.max_n > 0 ? options.max_n : 6;
    LemmaMobiusReport report = verify_lemma_mobius_minors(max_k);
    result.checked = report.entries.size();
    for (const auto& entry : report.entries) {
        if (options.emit)
            options.emit(json{{"g6", entry.g6}, {"matched", entry.matched}}.dump());
        if (entry.matched.empty())
            note(result, entry.g6 + ": internally-4-connected nonplanar minor of unexpected shape");
    }
    return result;
}

namespace {

// minimal k with pattern <= M_k, or -1 when absent up to the bound
int mobius_minor_parameter(const Graph& g, MinorCache* cache) {
    int bound = g.order() + g.size();
    MinorSearchLimits limits;
    limits.max_pattern_order = std::max(10, g.order());
    if (!has_minor(mobius_ladder(bound), g, cache, limits)) return -1;
    for (int k = 3; k <= bound; ++k)
        if (has_minor(mobius_ladder(k), g, cache, limits)) return k;
    return -1;
}

void expect_minor(SuiteResult& result, const SuiteOptions& options, const Graph& host,
                  const Graph& pattern, const std::string& what, MinorCache* cache) {
    MinorSearchLimits limits;
    limits.max_pattern_order = std::max(10, pattern.order());
    auto m = has_minor(host, pattern, cache, limits);
    std::string why;
    bool ok = m.has_value() && verify_model(host, pattern, *m, &why);
    if (options.emit)
        options.emit(json{{"check", what},
                          {"present", m.has_value()},
                          {"model", m ? model_to_json(*m) : json(nullptr)}}
                         .dump());
    if (!m)
        note(result, what + ": containment missing");
    else if (!ok)
        note(result, what + ": model rejected (" + why + ")");
    ++result.checked;
}

void expect_isomorphic(SuiteResult& result, const SuiteOptions& options, const Graph& a,
                       const Graph& b, const std::string& what) {
    bool ok = is_isomorphic(a, b);
    if (options.emit) options.emit(json{{"check", what}, {"ok", ok}}.dump());
    if (!ok) note(result, what + ": graphs not isomorphic");
    ++result.checked;
}

}  // namespace

SuiteResult run_figures(const SuiteOptions& options) {
    SuiteResult result;
    result.name = "figures";
    MinorCache cache;

    expect_minor(result, options, ex2(), pendant_addition(complete_graph(5)),
                 "EX2 contains K5+", &cache);
    expect_minor(result, options, ex1(), pendant_addition(complete_bipartite(3, 3)),
                 "EX1 contains K33+", &cache);
    expect_minor(result, options, ex8(), pendant_addition(complete_bipartite(3, 3)),
                 "EX8 contains K33+", &cache);
    expect_minor(result, options, line_graph(complete_bipartite(3, 3)), k33h(),
                 "L(K33) contains K33h", &cache);
    expect_minor(result, options, cube_plus_apex(), pendant_addition(complete_bipartite(3, 3)),
                 "Cube+v contains K33+", &cache);

    expect_isomorphic(result, options, double_wheel(3), complete_graph(5), "DW_3 = K5");
    expect_isomorphic(result, options, squared_cycle(5), complete_graph(5), "C2_5 = K5");
    expect_isomorphic(result, options, mobius_ladder(3), complete_bipartite(3, 3), "M_3 = K33");

    for (int n = 2; n <= 4; ++n) {
        expect_minor(result, options, mobius_ladder(2 * n + 1), squared_cycle(2 * n + 1),
                     "C2_" + std::to_string(2 * n + 1) + " <= M_" + std::to_string(2 * n + 1),
                     &cache);
        expect_minor(result, options, double_wheel(2 * n), alternating_double_wheel(2 * n),
                     "AW_" + std::to_string(2 * n) + " <= DW_" + std::to_string(2 * n), &cache);
    }

    // Wheel identifications with no two hubs on a shared triangle vertex are
    // minors of Mobius ladders. Rim-3 wheels never pin their hub (placing it
    // on a slot yields the same graph as leaving it off), so only the slots of
    // larger wheels must differ.
    std::set<std::string> tried;
    for (int n1 = 3; n1 <= 5; ++n1)
        for (int n2 = n1; n2 <= 5; ++n2)
            for (int n3 = n2; n3 <= 5; ++n3) {
                WClassSpec spec;
                std::array<int, 3> rims{n1, n2, n3};
                std::array<HubPlacement, 3> slots{HubPlacement::Slot0, HubPlacement::Slot1,
                                                  HubPlacement::Slot2};
                for (int i = 0; i < 3; ++i)
                    spec.wheels[i] = {rims[i],
                                      rims[i] == 3 ? HubPlacement::None : slots[i]};
                Graph member = w_class(spec).graph;
                if (!tried.insert(canonical_form(member)).second) continue;
                int k = mobius_minor_parameter(member, &cache);
                std::string what = "Wclass(" + std::to_string(n1) + "," + std::to_string(n2) +
                                   "," + std::to_string(n3) + ") unidentified hubs <= some M_k";
                if (options.emit) options.emit(json{{"check", what}, {"mobius_k", k}}.dump());
                if (k < 0) note(result, what + ": no Mobius ladder contains it");
                ++result.checked;
            }
    return result;
}

SuiteResult run_obstructions(const SuiteOptions& options) {
    SuiteResult result;
    result.name = "obstructions";

    std::vector<Graph> t5 = triad_additions(complete_graph(5));
    if (t5.size() != 1) note(result, "triad additions of K5: expected 1 class");
    else if (!is_isomorphic(t5[0], ex2())) note(result, "triad addition of K5 is not EX2");
    ++result.checked;

    std::vector<Graph> t33 = triad_additions(complete_bipartite(3, 3));
    if (t33.size() != 2) {
        note(result, "triad additions of K33: expected 2 classes");
    } else {
        bool match = (is_isomorphic(t33[0], ex1()) && is_isomorphic(t33[1], ex8())) ||
                     (is_isomorphic(t33[0], ex8()) && is_isomorphic(t33[1], ex1()));
        if (!match) note(result, "triad additions of K33 are not {EX1, EX8}");
        if (is_isomorphic(ex1(), ex8())) note(result, "EX1 and EX8 must differ");
    }
    ++result.checked;

    std::set<std::string> distinct;
    for (const NamedGraph& ng : obstruction_set_F()) {
        distinct.insert(canonical_form(ng.graph));
        if (!validate_obstruction(ng.graph)) note(result, ng.name + ": not an obstruction");
        if (!is_three_connected(ng.graph)) note(result, ng.name + ": not 3-connected");
        if (planar_bool(ng.graph)) note(result, ng.name + ": planar");
        ++result.checked;
    }
    if (distinct.size() != 5) note(result, "F must hold 5 distinct classes");

    std::set<std::string> distinct_prime;
    for (const NamedGraph& ng : obstruction_set_Fprime()) {
        distinct_prime.insert(canonical_form(ng.graph));
        if (!validate_obstruction(ng.graph)) note(result, ng.name + ": not an obstruction");
        ++result.checked;
    }
    if (distinct_prime.size() != 6) note(result, "F' must hold 6 distinct classes");

    // recursive minor-minimality: every proper minor of every F' member is
    // planar or almost-planar; minors of planar graphs stay planar, so the
    // closure only expands nonplanar graphs
    for (const NamedGraph& ng : obstruction_set_Fprime()) {
        std::set<std::string> seen{canonical_form(ng.graph)};
        std::vector<Graph> frontier{ng.graph};
        bool first = true;
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
                    Verdict v = decide_by_definition(c);
                    ++result.checked;
                    if (v.cls == GraphClass::Neither) {
                        note(result, ng.name + ": proper minor " + graph6_encode(c) +
                                         " is neither planar nor almost-planar");
                        continue;
                    }
                    next.push_back(std::move(c));
                }
            }
            frontier = std::move(next);
            if (first) first = false;
        }
        if (options.emit)
            options.emit(json{{"check", ng.name + " minor-minimal"},
                              {"proper_minors_checked", seen.size() - 1}}
                             .dump());
    }
    return result;
}

SuiteResult run_minor_closedness(const SuiteOptions& options) {
    SuiteResult result;
    result.name = "minor-closedness";
    int max_n = options.max_n > 0 ? options.max_n : 7;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Graph> batch;
        enumerate_graphs(n, [&](const Graph& g) { batch.push_back(g); });
        std::vector<std::string> problems(batch.size());
        parallel_for(batch.size(), [&](std::size_t i) {
            const Graph& g = batch[i];
            Verdict v = decide_by_definition(g);
            if (v.cls == GraphClass::Neither) return;
            for (const Edge& e : g.edges()) {
                if (decide_by_definition(delete_edge(g, e)).cls == GraphClass::Neither)
                    problems[i] = graph6_encode(g) + ": deletion leaves the class";
                if (decide_by_definition(contract_edge(g, e)).cls == GraphClass::Neither)
                    problems[i] = graph6_encode(g) + ": contraction leaves the class";
            }
        });
        for (const std::string& p : problems)
            if (!p.empty()) note(result, p);
        result.checked += batch.size();
    }
    return result;
}

}  // namespace apg
