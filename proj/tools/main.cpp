// almost-planar toolkit command line: decisions, certificates, generators,
// enumeration, and the theorem verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "apg/canonical.hpp"
#include "apg/connectivity.hpp"
#include "apg/enumerate.hpp"
#include "apg/json_io.hpp"
#include "apg/parallel.hpp"
#include "apg/suites.hpp"

namespace {

using namespace apg;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct InputSpec {
    std::string file;
    std::string name;
};

// one graph per line; returns false (after reporting) on parse errors
bool read_graphs(const InputSpec& in, std::vector<Graph>& out) {
    if (!in.name.empty()) {
        auto g = registry_lookup(in.name);
        if (!g) {
            std::cerr << "unknown registry key '" << in.name << "'; known keys:\n";
            for (const std::string& k : registry_keys()) std::cerr << "  " << k << "\n";
            return false;
        }
        out.push_back(std::move(*g));
        return true;
    }
    std::istream* is = &std::cin;
    std::ifstream f;
    if (!in.file.empty()) {
        f.open(in.file);
        if (!f) {
            std::cerr << "cannot open " << in.file << "\n";
            return false;
        }
        is = &f;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(*is, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const Graph6ParseError& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            return false;
        }
    }
    return true;
}

GraphClass structural_class(const Graph& g, const RecognitionOptions& ropt) {
    if (planar_bool(g)) return GraphClass::Planar;
    if (is_three_connected(g))
        return structural_witness_3conn(g, ropt) ? GraphClass::AlmostPlanar : GraphClass::Neither;
    return decompose_general(g, ropt) ? GraphClass::AlmostPlanar : GraphClass::Neither;
}

int cmd_check(const InputSpec& in, const std::string& method, bool as_json,
              const RecognitionOptions& ropt) {
    std::vector<Graph> graphs;
    if (!read_graphs(in, graphs)) return kExitUsage;

    bool violation = false;
    std::vector<std::string> lines(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) {
        const Graph& g = graphs[i];
        std::string g6 = graph6_encode(g);
        if (method == "all") {
            CrossCheckRecord rec = cross_check(g, ropt);
            if (!rec.agree || rec.definition.cls == GraphClass::Neither) violation = true;
            if (as_json) {
                lines[i] = record_to_json(rec).dump();
            } else {
                lines[i] = g6 + "\t" + to_string(rec.definition.cls) +
                           (rec.agree ? "" : "\tDISAGREE");
            }
            return;
        }
        Verdict v;
        if (method == "definition") v = decide_by_definition(g);
        else if (method == "obstructions") v = decide_by_obstructions(g, ropt);
        else v.cls = structural_class(g, ropt);
        if (v.cls == GraphClass::Neither) violation = true;
        if (as_json) {
            json j{{"g6", g6}, {"method", method}, {"verdict", to_string(v.cls)}};
            if (v.obstruction)
                j["obstruction"] = json{{"set", v.obstruction->set_name},
                                        {"pattern", v.obstruction->pattern_name},
                                        {"model", model_to_json(v.obstruction->model)}};
            if (v.planar_cert) j["certificate"] = certificate_to_json(*v.planar_cert);
            lines[i] = j.dump();
        } else {
            lines[i] = g6 + "\t" + to_string(v.cls);
        }
    });
    for (const std::string& l : lines) std::cout << l << "\n";
    return violation ? kExitViolation : kExitOk;
}

int cmd_certify(const InputSpec& in) {
    std::istream* is = &std::cin;
    std::ifstream f;
    if (!in.file.empty()) {
        f.open(in.file);
        if (!f) {
            std::cerr << "cannot open " << in.file << "\n";
            return kExitUsage;
        }
        is = &f;
    }
    std::string line;
    int lineno = 0;
    bool all_ok = true;
    while (std::getline(*is, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        Graph g;
        try {
            j = json::parse(line);
            g = graph6_decode(j.at("g6").get<std::string>());
        } catch (const std::exception& e) {
            std::cerr << "line " << lineno << ": " << e.what() << "\n";
            return kExitUsage;
        }
        std::string why;
        bool ok = true;
        try {
            const json& certs = j.value("certificates", json::object());
            if (certs.contains("planarity")) {
                PlanarityCertificate c = certificate_from_json(certs["planarity"]);
                ok = ok && verify_certificate(g, c, &why);
            }
            if (ok && certs.contains("edge_table")) {
                Verdict v;
                v.cls = GraphClass::AlmostPlanar;
                v.edge_table = edge_table_from_json(certs["edge_table"]);
                ok = verify_verdict(g, v, &why);
            }
            if (ok && certs.contains("neither")) {
                const json& ne = certs["neither"];
                Verdict v;
                v.cls = GraphClass::Neither;
                NeitherEvidence ev;
                ev.failing_edge = Edge(ne.at("edge").at(0).get<int>(), ne.at("edge").at(1).get<int>());
                ev.delete_cert = certificate_from_json(ne.at("delete"));
                ev.contract_cert = certificate_from_json(ne.at("contract"));
                v.neither = std::move(ev);
                ok = verify_verdict(g, v, &why);
            }
            if (ok && j.contains("obstructions") && j["obstructions"].contains("hit") &&
                !j["obstructions"]["hit"].is_null()) {
                const json& hit = j["obstructions"]["hit"];
                auto pattern = registry_lookup(hit.at("pattern").get<std::string>());
                if (!pattern) {
                    ok = false;
                    why = "unknown obstruction pattern";
                } else {
                    MinorModel m = model_from_json(hit.at("model"));
                    ok = verify_model(g, *pattern, m, &why);
                }
            }
            if (ok && j.contains("structural") && j["structural"].is_object()) {
                const json& s = j["structural"];
                if (s.contains("family") && !s["family"].is_null()) {
                    FamilyWitness w = family_witness_from_json(s["family"]);
                    ok = verify_family_witness(g, w, &why);
                }
                if (ok && s.contains("decomposition") && !s["decomposition"].is_null()) {
                    DecompositionWitness w = decomposition_witness_from_json(s["decomposition"], g);
                    ok = verify_decomposition_witness(g, w, &why);
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        std::cout << (ok ? "ok" : "fail: " + why) << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? kExitOk : kExitViolation;
}

int cmd_gen(const std::string& name) {
    auto g = registry_lookup(name);
    if (!g) {
        std::cerr << "unknown registry key '" << name << "'; known keys:\n";
        for (const std::string& k : registry_keys()) std::cerr << "  " << k << "\n";
        return kExitUsage;
    }
    std::cout << graph6_encode(*g) << "\n";
    return kExitOk;
}

std::optional<Graph> resolve_graph(const std::string& spec) {
    if (auto g = registry_lookup(spec)) return g;
    try {
        return graph6_decode(spec);
    } catch (const Graph6ParseError&) {
        return std::nullopt;
    }
}

int cmd_minor(const std::string& host_spec, const std::string& pattern_spec, bool as_json) {
    auto host = resolve_graph(host_spec);
    auto pattern = resolve_graph(pattern_spec);
    if (!host || !pattern) {
        std::cerr << "host/pattern must be a registry key or a graph6 line\n";
        return kExitUsage;
    }
    MinorSearchLimits limits;
    limits.max_pattern_order = std::max(10, pattern->order());
    auto m = has_minor(*host, *pattern, nullptr, limits);
    if (as_json) {
        json j{{"host", graph6_encode(*host)},
               {"pattern", graph6_encode(*pattern)},
               {"present", m.has_value()},
               {"model", m ? model_to_json(*m) : json(nullptr)}};
        std::cout << j.dump() << "\n";
    } else if (m) {
        std::cout << model_to_json(*m).dump() << "\n";
    } else {
        std::cout << "absent" << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(int n, const std::vector<std::string>& filters) {
    GraphPredicate pred = nullptr;
    if (!filters.empty()) {
        pred = [filters](const Graph& g) {
            for (const std::string& f : filters) {
                if (f == "connected" && !is_connected(g)) return false;
                if (f == "biconnected" && vertex_connectivity(g) < 2) return false;
                if (f == "triconnected" && !is_three_connected(g)) return false;
                if (f == "planar" && !planar_bool(g)) return false;
                if (f == "nonplanar" && planar_bool(g)) return false;
            }
            return true;
        };
    }
    std::vector<std::string> lines;
    try {
        enumerate_graphs(n, [&](const Graph& g) { lines.push_back(graph6_encode(g)); }, pred);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    std::sort(lines.begin(), lines.end());
    for (const std::string& l : lines) std::cout << l << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, int max_n, int bound) {
    SuiteOptions opt;
    opt.max_n = max_n;
    opt.structural_bound = bound;
    opt.emit = [](const std::string& line) { std::cout << line << "\n"; };
    SuiteResult result;
    if (suite == "thm1") result = run_thm1(opt);
    else if (suite == "thm4") result = run_thm4(opt);
    else if (suite == "lemma-mobius") result = run_lemma_mobius(opt);
    else if (suite == "figures") result = run_figures(opt);
    else if (suite == "obstructions") result = run_obstructions(opt);
    else if (suite == "minor-closedness") result = run_minor_closedness(opt);
    else {
        std::cerr << "unknown suite '" << suite
                  << "' (thm1, thm4, lemma-mobius, figures, obstructions, minor-closedness)\n";
        return kExitUsage;
    }
    json summary{{"suite", result.name},
                 {"checked", result.checked},
                 {"violations", result.violations}};
    std::cout << summary.dump() << "\n";
    return result.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"almost-planar graph toolkit"};
    app.require_subcommand(1);

    InputSpec in;
    std::string method = "all";
    std::string set_mode = "auto";
    bool as_json = false;
    int bound = -1;

    CLI::App* check = app.add_subcommand("check", "classify graphs as planar / almost-planar / neither");
    check->add_option("--file", in.file, "graph6 file (default: stdin)");
    check->add_option("--name", in.name, "registry key instead of graph6 input");
    check->add_option("--method", method, "definition|obstructions|structural|all")
        ->check(CLI::IsMember({"definition", "obstructions", "structural", "all"}));
    check->add_option("--set", set_mode, "obstruction set: F|F'|auto")
        ->check(CLI::IsMember({"F", "F'", "auto"}));
    check->add_option("--bound", bound, "structural search bound override");
    check->add_flag("--json", as_json, "JSON-lines output");

    CLI::App* certify = app.add_subcommand("certify", "re-verify certificates from check --json");
    certify->add_option("--file", in.file, "JSON-lines file (default: stdin)");

    std::string gen_name;
    CLI::App* gen = app.add_subcommand("gen", "emit a named graph as graph6");
    gen->add_option("name", gen_name, "registry key")->required();

    std::string host_spec, pattern_spec;
    CLI::App* minor = app.add_subcommand("minor", "minor containment with a branch-set model");
    minor->add_option("--host", host_spec, "registry key or graph6")->required();
    minor->add_option("--pattern", pattern_spec, "registry key or graph6")->required();
    minor->add_flag("--json", as_json, "JSON output");

    int enum_n = 0;
    std::vector<std::string> filters;
    CLI::App* enumerate = app.add_subcommand("enumerate", "isomorph-free graphs on n vertices");
    enumerate->add_option("n", enum_n, "vertex count")->required();
    enumerate->add_option("--filter", filters,
                          "connected|biconnected|triconnected|planar|nonplanar");

    std::string suite;
    int max_n = -1;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "thm1|thm4|lemma-mobius|figures|obstructions|minor-closedness")
        ->required();
    verify->add_option("--max-n", max_n, "override the suite's size bound");
    verify->add_option("--bound", bound, "structural search bound override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    RecognitionOptions ropt;
    ropt.structural_bound = bound;
    MinorCache cache;
    ropt.cache = &cache;
    if (set_mode == "F") ropt.set_mode = ObstructionSetMode::FOnly;
    else if (set_mode == "F'") ropt.set_mode = ObstructionSetMode::FPrimeOnly;

    try {
        if (check->parsed()) return cmd_check(in, method, as_json, ropt);
        if (certify->parsed()) return cmd_certify(in);
        if (gen->parsed()) return cmd_gen(gen_name);
        if (minor->parsed()) return cmd_minor(host_spec, pattern_spec, as_json);
        if (enumerate->parsed()) return cmd_enumerate(enum_n, filters);
        if (verify->parsed()) return cmd_verify(suite, max_n, bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
