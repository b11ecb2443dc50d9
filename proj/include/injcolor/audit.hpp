#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "injcolor/generators.hpp"
#include "injcolor/graph.hpp"

namespace injcolor {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    std::vector<CriterionResult> criteria;

    bool all_pass() const;
    /// One "[PASS]"/"[FAIL]" line per criterion followed by its detail.
    /// Contains no timings, so identical runs render identical text.
    std::string render() const;
};

// Instance set shared by the coloring, stage-coverage and sandwich checks:
// seeds 1..200 are line graphs of random_subcubic(6 + (seed-1) % 15, seed),
// seeds 201..300 are random_claw_free_max4(5 + (seed-201) % 26, seed).
struct CorpusInstance {
    std::uint64_t seed = 0;
    GenSpec spec;
    Graph graph;
};
std::vector<CorpusInstance> acceptance_corpus();

/// The first `count` outputs of random_claw_free_subcubic(6 + seed % 10, seed),
/// seed = 1, 2, ..., that are connected with Δ = 3.
std::vector<Graph> subcubic_claw_free_corpus(std::size_t count);

CriterionResult check_exact_values();        // 1
CriterionResult check_bound_on_corpus();     // 2
CriterionResult check_stage_coverage();      // 3
CriterionResult check_invariant_fuzz();      // 4
CriterionResult check_oracle_equivalence();  // 5
CriterionResult check_sandwich();            // 6
CriterionResult check_subcubic_bound();      // 7

/// Runs 1-7, then reruns them and compares the rendered text (8).
AuditReport run_audit();

}  // namespace injcolor
