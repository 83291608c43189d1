#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "apg/families.hpp"
#include "apg/graph.hpp"
#include "apg/minors.hpp"
#include "apg/planarity.hpp"
#include "apg/topology.hpp"

namespace apg {

enum class GraphClass { Planar, AlmostPlanar, Neither };

std::string to_string(GraphClass c);

// Per-edge record of which of g\e and g/e is planar.
struct EdgeFate {
    Edge e{0, 1};
    bool delete_planar = false;
    bool contract_planar = false;
};

struct NeitherEvidence {
    Edge failing_edge{0, 1};
    PlanarityCertificate delete_cert;    // Kuratowski witness for g\e
    PlanarityCertificate contract_cert;  // Kuratowski witness for g/e
};

struct ObstructionHit {
    std::string set_name;  // "F" or "F'"
    std::string pattern_name;
    Graph pattern;
    MinorModel model;
};

struct Verdict {
    GraphClass cls = GraphClass::Planar;
    std::optional<PlanarityCertificate> planar_cert;  // Planar
    std::vector<EdgeFate> edge_table;                 // AlmostPlanar (covers every edge)
    std::optional<NeitherEvidence> neither;           // Neither
    std::optional<ObstructionHit> obstruction;        // Neither found via a pattern
    // set on 3-connected inputs to the obstruction decider: F and F' agreed
    std::optional<bool> f_fprime_agree;
};

enum class ObstructionSetMode { Auto, FOnly, FPrimeOnly };

struct RecognitionOptions {
    // bound on double-wheel / Mobius-ladder host size; -1 means |V| + |E|
    int structural_bound = -1;
    MinorCache* cache = nullptr;
    // Auto runs F' and, on 3-connected inputs, F as a cross-check
    ObstructionSetMode set_mode = ObstructionSetMode::Auto;
};

std::vector<EdgeFate> edge_fate_table(const Graph& g);

// Almost-planarity straight from the definition: every edge has a planar
// deletion or a planar contraction.
Verdict decide_by_definition(const Graph& g);

// Almost-planarity as freeness from the forbidden-minor sets. On 3-connected
// inputs both sets are run and must agree.
Verdict decide_by_obstructions(const Graph& g, const RecognitionOptions& options = {});

enum class FamilyTag { DoubleWheel, MobiusLadder, WClass };

std::string to_string(FamilyTag t);

struct FamilyWitness {
    FamilyTag tag = FamilyTag::DoubleWheel;
    int parameter = 0;                // k for DW_k / M_k
    std::optional<WClassSpec> spec;   // for WClass
    Graph member;                     // the generated family graph
    MinorModel embedding;             // model of g inside member
};

struct DecompositionWitness {
    Graph core;                            // H: 3-connected almost-planar
    std::vector<EdgeFate> core_edge_table; // evidence for H's almost-planarity
    TopologicalCore expansion;             // H plus the subdivision paths making up G*
    std::vector<int> isolated_vertices;    // stripped from g to obtain G*
};

using StructuralWitness = std::variant<FamilyWitness, DecompositionWitness>;

// Searches for g inside double wheels and Mobius ladders up to the size bound
// and inside wheel identifications with rims up to |V(g)|. Requires g
// 3-connected and nonplanar.
std::optional<FamilyWitness> structural_witness_3conn(const Graph& g,
                                                      const RecognitionOptions& options = {});

// General decomposition: strips isolated vertices, suppresses subdivision
// vertices, and checks the core is 3-connected almost-planar with every
// subdivided edge deletable-to-planar. Requires g nonplanar.
std::optional<DecompositionWitness> decompose_general(const Graph& g,
                                                      const RecognitionOptions& options = {});

bool verify_verdict(const Graph& g, const Verdict& v, std::string* reason = nullptr);
bool verify_family_witness(const Graph& g, const FamilyWitness& w, std::string* reason = nullptr);
bool verify_decomposition_witness(const Graph& g, const DecompositionWitness& w,
                                  std::string* reason = nullptr);

struct CrossCheckRecord {
    std::string g6;
    Verdict definition;
    Verdict obstructions;
    bool three_connected = false;
    bool ran_structural = false;
    bool ran_decomposition = false;
    std::optional<FamilyWitness> family;
    std::optional<DecompositionWitness> decomposition;
    bool agree = false;
};

// Runs every decider applicable to g and reports whether they agree.
CrossCheckRecord cross_check(const Graph& g, const RecognitionOptions& options = {});

struct LemmaMobiusReport {
    struct Entry {
        std::string g6;
        std::string matched;  // "M:n" or "C2:n", empty when unmatched
    };
    std::vector<Entry> entries;  // internally-4-connected nonplanar minors found
    std::vector<std::string> violations;
    bool ok = false;
};

// Exhaustive check that every internally-4-connected nonplanar minor of M_k,
// k <= max_k, is a Mobius ladder or an odd squared cycle.
LemmaMobiusReport verify_lemma_mobius_minors(int max_k = 6);

}  // namespace apg
