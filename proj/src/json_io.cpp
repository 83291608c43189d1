#include "apg/json_io.hpp"

namespace apg {

namespace {

json edge_to_json(const Edge& e) { return json::array({e.u, e.v}); }

Edge edge_from_json(const json& j) { return Edge(j.at(0).get<int>(), j.at(1).get<int>()); }

json set_to_json(VertexSet s) {
    json arr = json::array();
    for (int v : VsRange(s)) arr.push_back(v);
    return arr;
}

VertexSet set_from_json(const json& j) {
    VertexSet s = 0;
    for (const json& v : j) s |= vs_bit(v.get<int>());
    return s;
}

}  // namespace

json edge_table_to_json(const std::vector<EdgeFate>& table) {
    json arr = json::array();
    for (const EdgeFate& f : table)
        arr.push_back(json::array({edge_to_json(f.e), f.delete_planar, f.contract_planar}));
    return arr;
}

std::vector<EdgeFate> edge_table_from_json(const json& j) {
    std::vector<EdgeFate> table;
    for (const json& row : j)
        table.push_back({edge_from_json(row.at(0)), row.at(1).get<bool>(), row.at(2).get<bool>()});
    return table;
}

json certificate_to_json(const PlanarityCertificate& c) {
    json j;
    j["verdict"] = c.planar ? "planar" : "nonplanar";
    if (c.planar) {
        j["rotation"] = c.rotation;
        j["kuratowski"] = nullptr;
    } else {
        j["rotation"] = nullptr;
        json k;
        k["tag"] = c.kuratowski.tag == KuratowskiTag::K5 ? "K5" : "K33";
        k["edges"] = json::array();
        for (const Edge& e : c.kuratowski.edges) k["edges"].push_back(edge_to_json(e));
        k["branch"] = c.kuratowski.branch_vertices;
        j["kuratowski"] = k;
    }
    return j;
}

PlanarityCertificate certificate_from_json(const json& j) {
    PlanarityCertificate c;
    c.planar = j.at("verdict").get<std::string>() == "planar";
    if (c.planar) {
        c.rotation = j.at("rotation").get<RotationSystem>();
    } else {
        const json& k = j.at("kuratowski");
        c.kuratowski.tag = k.at("tag").get<std::string>() == "K5" ? KuratowskiTag::K5 : KuratowskiTag::K33;
        for (const json& e : k.at("edges")) c.kuratowski.edges.push_back(edge_from_json(e));
        c.kuratowski.branch_vertices = k.at("branch").get<std::vector<int>>();
    }
    return c;
}

json model_to_json(const MinorModel& m) {
    json j;
    json bs = json::object();
    for (std::size_t p = 0; p < m.branch_sets.size(); ++p)
        bs[std::to_string(p)] = set_to_json(m.branch_sets[p]);
    j["branch_sets"] = bs;
    json ew = json::array();
    for (const auto& [pe, he] : m.edge_witness)
        ew.push_back(json::array({edge_to_json(pe), edge_to_json(he)}));
    j["edge_witness"] = ew;
    return j;
}

MinorModel model_from_json(const json& j) {
    MinorModel m;
    const json& bs = j.at("branch_sets");
    m.branch_sets.resize(bs.size());
    for (auto it = bs.begin(); it != bs.end(); ++it) {
        std::size_t p = std::stoul(it.key());
        if (p >= m.branch_sets.size()) m.branch_sets.resize(p + 1);
        m.branch_sets[p] = set_from_json(it.value());
    }
    for (const json& row : j.at("edge_witness"))
        m.edge_witness.emplace_back(edge_from_json(row.at(0)), edge_from_json(row.at(1)));
    return m;
}

json wspec_to_json(const WClassSpec& s) {
    json arr = json::array();
    for (const WheelDescriptor& w : s.wheels) {
        std::string p = w.placement == HubPlacement::None
                            ? "none"
                            : std::to_string(static_cast<int>(w.placement));
        arr.push_back(json::array({w.rim, p}));
    }
    return arr;
}

WClassSpec wspec_from_json(const json& j) {
    WClassSpec s;
    for (int i = 0; i < 3; ++i) {
        s.wheels[i].rim = j.at(i).at(0).get<int>();
        std::string p = j.at(i).at(1).get<std::string>();
        s.wheels[i].placement = p == "none"  ? HubPlacement::None
                                : p == "0"   ? HubPlacement::Slot0
                                : p == "1"   ? HubPlacement::Slot1
                                             : HubPlacement::Slot2;
    }
    return s;
}

json family_witness_to_json(const FamilyWitness& w) {
    json j;
    j["family"] = to_string(w.tag);
    j["parameter"] = w.parameter;
    j["spec"] = w.spec ? wspec_to_json(*w.spec) : json(nullptr);
    j["model"] = model_to_json(w.embedding);
    return j;
}

FamilyWitness family_witness_from_json(const json& j) {
    FamilyWitness w;
    std::string tag = j.at("family").get<std::string>();
    w.parameter = j.at("parameter").get<int>();
    if (tag == "DoubleWheel") {
        w.tag = FamilyTag::DoubleWheel;
        w.member = double_wheel(w.parameter);
    } else if (tag == "MobiusLadder") {
        w.tag = FamilyTag::MobiusLadder;
        w.member = mobius_ladder(w.parameter);
    } else {
        w.tag = FamilyTag::WClass;
        w.spec = wspec_from_json(j.at("spec"));
        w.member = w_class(*w.spec).graph;
    }
    w.embedding = model_from_json(j.at("model"));
    return w;
}

json decomposition_witness_to_json(const DecompositionWitness& w) {
    json j;
    j["core_g6"] = graph6_encode(w.core);
    j["core_map"] = w.expansion.core_to_input;
    json paths = json::array();
    for (const auto& [e, chain] : w.expansion.path_map)
        paths.push_back(json::array({edge_to_json(e), chain}));
    j["paths"] = paths;
    j["isolated"] = w.isolated_vertices;
    return j;
}

DecompositionWitness decomposition_witness_from_json(const json& j, const Graph&) {
    DecompositionWitness w;
    w.core = graph6_decode(j.at("core_g6").get<std::string>());
    w.expansion.core = w.core;
    w.expansion.core_to_input = j.at("core_map").get<std::vector<int>>();
    for (const json& row : j.at("paths"))
        w.expansion.path_map[edge_from_json(row.at(0))] = row.at(1).get<std::vector<int>>();
    w.isolated_vertices = j.at("isolated").get<std::vector<int>>();
    return w;
}

json record_to_json(const CrossCheckRecord& rec) {
    json j;
    j["g6"] = rec.g6;
    j["definition"] = to_string(rec.definition.cls);
    json obs;
    obs["set"] = rec.obstructions.obstruction ? rec.obstructions.obstruction->set_name : "F'";
    if (rec.obstructions.obstruction) {
        obs["hit"] = json{{"pattern", rec.obstructions.obstruction->pattern_name},
                          {"model", model_to_json(rec.obstructions.obstruction->model)}};
    } else {
        obs["hit"] = nullptr;
    }
    j["obstructions"] = obs;

    if (!rec.ran_structural && !rec.ran_decomposition) {
        j["structural"] = nullptr;
    } else {
        json s = json::object();
        if (rec.ran_structural)
            s["family"] = rec.family ? family_witness_to_json(*rec.family) : json(nullptr);
        if (rec.ran_decomposition)
            s["decomposition"] =
                rec.decomposition ? decomposition_witness_to_json(*rec.decomposition) : json(nullptr);
        j["structural"] = s;
    }
    j["agree"] = rec.agree;

    json certs = json::object();
    if (rec.definition.planar_cert)
        certs["planarity"] = certificate_to_json(*rec.definition.planar_cert);
    if (!rec.definition.edge_table.empty())
        certs["edge_table"] = edge_table_to_json(rec.definition.edge_table);
    if (rec.definition.neither) {
        const NeitherEvidence& ev = *rec.definition.neither;
        certs["neither"] = json{{"edge", edge_to_json(ev.failing_edge)},
                                {"delete", certificate_to_json(ev.delete_cert)},
                                {"contract", certificate_to_json(ev.contract_cert)}};
    }
    j["certificates"] = certs;
    return j;
}

}  // namespace apg
