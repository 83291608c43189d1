#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "apg/graph.hpp"

namespace apg {

struct SuiteOptions {
    int max_n = -1;            // -1: suite default (thm1: 8, thm4: 7, lemma: 6, closedness: 7)
    int structural_bound = -1;  // -1: |V| + |E|
    std::function<void(const std::string&)> emit;  // JSON-lines sink, may be empty
};

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Equivalence of the three deciders over all 3-connected nonplanar graphs on
// up to max_n vertices.
SuiteResult run_thm1(const SuiteOptions& options = {});

// Equivalence of definition, F'-freeness, and decomposition over all nonplanar
// graphs (disconnected included) on up to max_n vertices.
SuiteResult run_thm4(const SuiteOptions& options = {});

// Internally-4-connected nonplanar minors of Mobius ladders are Mobius
// ladders or odd squared cycles.
SuiteResult run_lemma_mobius(const SuiteOptions& options = {});

// Containment regressions and family facts (pinned witnesses).
SuiteResult run_figures(const SuiteOptions& options = {});

// Obstruction identities, validity, and recursive minor-minimality.
SuiteResult run_obstructions(const SuiteOptions& options = {});

// No single deletion or contraction of a planar or almost-planar graph on up
// to max_n vertices leaves the class.
SuiteResult run_minor_closedness(const SuiteOptions& options = {});

}  // namespace apg
