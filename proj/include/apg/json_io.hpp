#pragma once

#include <json.hpp>

#include "apg/minors.hpp"
#include "apg/planarity.hpp"
#include "apg/recognition.hpp"

namespace apg {

using nlohmann::json;

json certificate_to_json(const PlanarityCertificate& c);
PlanarityCertificate certificate_from_json(const json& j);

json edge_table_to_json(const std::vector<EdgeFate>& table);
std::vector<EdgeFate> edge_table_from_json(const json& j);

json model_to_json(const MinorModel& m);
MinorModel model_from_json(const json& j);

json wspec_to_json(const WClassSpec& s);
WClassSpec wspec_from_json(const json& j);

json family_witness_to_json(const FamilyWitness& w);
FamilyWitness family_witness_from_json(const json& j);

json decomposition_witness_to_json(const DecompositionWitness& w);
DecompositionWitness decomposition_witness_from_json(const json& j, const Graph& g);

// One JSON-lines record of a full cross-check:
// {"g6":..., "definition":..., "obstructions":{"set":...,"hit":...},
//  "structural":..., "agree":..., "certificates":{...}}
json record_to_json(const CrossCheckRecord& rec);

}  // namespace apg
