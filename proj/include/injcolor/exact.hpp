#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "injcolor/conflict.hpp"
#include "injcolor/graph.hpp"

namespace injcolor {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Optimal (or best found) proper vertex coloring of a graph.
struct VertexColoringResult {
    int chi = 0;
    std::vector<Color> colors;   // per vertex, 1..chi
    int lower_bound = 0;
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
};

/// DSATUR branch and bound. The lower bound comes from greedy cliques, the
/// starting upper bound from first-fit in vertex order. Vertex selection is
/// max saturation, then max degree, then lowest id; colors ascend. When the
/// node budget runs out `chi` is only an upper bound.
VertexColoringResult chromatic_number_bb(const Graph& h, std::uint64_t budget = kDefaultBudget);

struct SolveResult {
    int chi = 0;
    PartialColoring witness;
    int lower_bound = 0;
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
};

/// Injective chromatic index via the conflict graph.
SolveResult injective_chromatic_index(const Graph& g, std::uint64_t budget = kDefaultBudget);

class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kBruteForceMaxEdges = 12;

/// Exhaustive oracle: tries k = 1, 2, ... and enumerates colorings with
/// canonical color introduction, testing conflicts pairwise with `sees`.
/// Throws TooLarge above kBruteForceMaxEdges edges.
int brute_force_index(const Graph& g);

}  // namespace injcolor
