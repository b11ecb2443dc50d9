#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "injcolor/conflict.hpp"
#include "injcolor/graph.hpp"

namespace injcolor {

/// Reducible configurations, in the priority order find_reduction uses.
enum class ReductionKind { Deg3, K4Shared, K4Distinct, ThreeTriangles, FourCycle, FinalConfig };

inline constexpr std::size_t kReductionKinds = 6;

std::string_view to_string(ReductionKind kind);

/// A detected configuration of g.
///
/// `labels` records the named roles of the configuration so the extension
/// order can be rebuilt from it:
///   Deg3, ThreeTriangles   v
///   K4Shared               v1 v2 v3 v4 w        (w = common outside neighbor of v1, v2)
///   K4Distinct             v1 v2 v3 v4 u1 u2 u3 u4
///   FourCycle              x y u v x1 y1 u1 v1 y1' y1'' u1' u1''
///   FinalConfig            v u1 u2 u3 u4 x1 y1 x2 y2 x3 y3 x4 y4
/// For FourCycle, when y1 and u1 share a neighbor other than u it is stored
/// as both y1'' and u1'.
struct ReductionStep {
    ReductionKind kind = ReductionKind::Deg3;
    std::vector<Vertex> deleted;
    std::vector<Vertex> labels;
    std::vector<std::size_t> frontier;     // edge indices of the host graph
    std::vector<std::size_t> order_hint;   // prefix of the extension order
    std::vector<std::size_t> escalation;   // extra edges to uncolor on retry
};

class StructureViolation : public std::runtime_error {
public:
    StructureViolation(ReductionKind stage, const std::string& message, std::vector<Vertex> witness);
    ReductionKind stage;
    std::vector<Vertex> witness;
};

/// Input is not claw-free or has a vertex of degree 5 or more.
class PreconditionFailed : public std::runtime_error {
public:
    explicit PreconditionFailed(ClawWitness claw);
    PreconditionFailed(Vertex vertex, std::size_t degree);
    std::optional<ClawWitness> claw;
    std::optional<Vertex> high_degree_vertex;
};

class Unextendable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalUnextendable : public std::runtime_error {
public:
    InternalUnextendable(ReductionKind stage, std::size_t level);
    ReductionKind stage;
};

/// First applicable configuration in priority order. Expects g claw-free with
/// Δ ≤ 4 and at least one edge; isolated vertices are ignored.
ReductionStep find_reduction(const Graph& g);

/// Fills frontier, order_hint and escalation of `step` from its labels.
void frontier_for(const Graph& g, ReductionStep& step);

struct ExtendStats {
    std::size_t nodes = 0;
};

/// Colors every frontier edge on top of phi by exhaustive backtracking.
/// Edges are taken from order_hint first, then most-constrained-first with
/// lowest index breaking ties; colors ascend. Throws Unextendable.
PartialColoring extend(const Graph& g, PartialColoring phi, std::span<const std::size_t> frontier,
                       std::span<const std::size_t> order_hint, ExtendStats* stats = nullptr);

struct ReductionTrace {
    std::array<std::size_t, kReductionKinds> stage_counts{};
    std::size_t escalations = 0;
    std::size_t extend_nodes = 0;
    std::size_t max_extend_nodes = 0;

    std::size_t count(ReductionKind kind) const {
        return stage_counts[static_cast<std::size_t>(kind)];
    }
};

/// Injective k-edge-coloring of a claw-free graph with Δ ≤ 4, built by
/// peeling reducible configurations and extending back out.
/// Throws PreconditionFailed, InternalUnextendable.
PartialColoring color_claw_free(const Graph& g, int k = kDefaultColors,
                                ReductionTrace* trace = nullptr);

/// First-fit on the conflict graph in edge order. No bound on the colors
/// used; the palette grows to fit.
PartialColoring color_greedy(const Graph& g, int k = kDefaultColors);

}  // namespace injcolor
