#pragma once

#include <string>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

// Cyclic neighbor order per vertex.
using RotationSystem = std::vector<std::vector<int>>;

enum class KuratowskiTag { K5, K33 };

struct KuratowskiWitness {
    KuratowskiTag tag = KuratowskiTag::K5;
    std::vector<Edge> edges;           // a subdivision of K5 or K33 inside the graph
    std::vector<int> branch_vertices;  // its vertices of degree 4 (K5) or 3 (K33)
};

struct PlanarityCertificate {
    bool planar = false;
    RotationSystem rotation;       // planar case
    KuratowskiWitness kuratowski;  // nonplanar case
};

struct PlanarityResult {
    bool planar = false;
    PlanarityCertificate certificate;
};

// Planarity verdict without certificate construction.
bool planar_bool(const Graph& g);

// Certified verdict: an embedding whose faces satisfy Euler's formula, or a
// Kuratowski subdivision found by stripping non-critical edges.
PlanarityResult is_planar(const Graph& g);

// Audits a certificate against g without trusting its producer. On failure
// returns false and, if given, stores a reason.
bool verify_certificate(const Graph& g, const PlanarityCertificate& c,
                        std::string* reason = nullptr);

// Total face count of the embedding when drawn in one plane: per-component
// face-trace counts sharing one outer face, so v - e + f = 1 + c.
int embedding_face_count(const Graph& g, const RotationSystem& rotation);

// D(G): edges whose deletion leaves a planar graph.
std::vector<Edge> deletion_planar_set(const Graph& g);
// Edges whose contraction leaves a planar graph.
std::vector<Edge> contraction_planar_set(const Graph& g);

}  // namespace apg
