#include <doctest.h>

#include "helpers.hpp"
#include "injcolor/conflict.hpp"
#include "injcolor/exact.hpp"
#include "injcolor/generators.hpp"
#include "injcolor/reducer.hpp"

using namespace injcolor;
using testing::make;

namespace {

bool proper(const Graph& h, const std::vector<Color>& colors) {
    for (auto [a, b] : h.edge_list())
        if (colors[a] == colors[b]) return false;
    return true;
}

}  // namespace

TEST_CASE("vertex chromatic number on small graphs") {
    CHECK(chromatic_number_bb(make({{0, 1}, {1, 2}, {0, 2}})).chi == 3);
    CHECK(chromatic_number_bb(named_graph("cycle", 5)).chi == 3);
    CHECK(chromatic_number_bb(named_graph("cycle", 6)).chi == 2);
    CHECK(chromatic_number_bb(named_graph("k5")).chi == 5);
    std::vector<std::pair<Vertex, Vertex>> none;
    CHECK(chromatic_number_bb(Graph::from_edge_list(none, 4)).chi == 1);
    CHECK(chromatic_number_bb(Graph{}).chi == 0);
    // Petersen is 3-chromatic.
    const Graph pet = make({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    const VertexColoringResult r = chromatic_number_bb(pet);
    CHECK(r.chi == 3);
    CHECK(proper(pet, r.colors));
    CHECK(r.lower_bound <= r.chi);
    CHECK_FALSE(r.budget_exhausted);
}

TEST_CASE("vertex coloring matches exhaustive search") {
    SeededRng rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + rng.below(8);
        const Graph h = testing::random_graph(rng, n, n * 3);
        const VertexColoringResult r = chromatic_number_bb(h);
        CHECK(proper(h, r.colors));
        for (Color c : r.colors) CHECK((c >= 1 && c <= r.chi));
        // Exhaustive: smallest k with a proper k-coloring.
        int best = 0;
        for (int k = 1; k <= static_cast<int>(n) && best == 0; ++k) {
            std::vector<Color> col(n, 1);
            while (true) {
                if (proper(h, col)) {
                    best = k;
                    break;
                }
                std::size_t i = 0;
                while (i < n && col[i] == k) col[i++] = 1;
                if (i == n) break;
                ++col[i];
            }
        }
        CHECK(r.chi == best);
    }
}

TEST_CASE("injective index of named graphs") {
    CHECK(injective_chromatic_index(named_graph("k4")).chi == 6);
    CHECK(injective_chromatic_index(named_graph("k5")).chi == 10);
    CHECK(injective_chromatic_index(named_graph("cycle", 5)).chi == 3);
    CHECK(injective_chromatic_index(named_graph("cycle", 4)).chi == 2);
    CHECK(injective_chromatic_index(named_graph("path", 2)).chi == 1);
    CHECK(injective_chromatic_index(named_graph("octahedron")).chi == 6);
    CHECK(injective_chromatic_index(named_graph("line-petersen")).chi == 8);
    CHECK(injective_chromatic_index(named_graph("line-k33")).chi == 9);
}

TEST_CASE("brute force oracle examples and size limit") {
    CHECK(brute_force_index(named_graph("k4")) == 6);
    CHECK(brute_force_index(named_graph("cycle", 5)) == 3);
    CHECK(brute_force_index(named_graph("octahedron")) == 6);
    CHECK(brute_force_index(make({{0, 1}})) == 1);
    std::vector<std::pair<Vertex, Vertex>> none;
    CHECK(brute_force_index(Graph::from_edge_list(none, 2)) == 0);
    CHECK_THROWS_AS(brute_force_index(named_graph("cycle", 13)), TooLarge);
    CHECK_NOTHROW(brute_force_index(named_graph("cycle", 12)));
}

TEST_CASE("branch and bound agrees with the brute force oracle") {
    SeededRng rng(32);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 3 + rng.below(7);
        const Graph g = testing::random_graph(rng, n, kBruteForceMaxEdges);
        const SolveResult r = injective_chromatic_index(g);
        CHECK(r.chi == brute_force_index(g));
        CHECK(r.witness.size() == g.edge_count());
        CHECK(verify(g, r.witness).valid);
        CHECK(r.witness.is_total());
        CHECK(static_cast<int>(r.witness.distinct_colors()) == r.chi);
    }
}

TEST_CASE("index is monotone under vertex deletion") {
    SeededRng rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_claw_free_max4(6 + rng.below(8), trial + 100);
        const int chi = injective_chromatic_index(g).chi;
        std::vector<Vertex> removed{static_cast<Vertex>(rng.below(g.vertex_count()))};
        const Graph sub = delete_vertices(g, removed).graph;
        CHECK(injective_chromatic_index(sub).chi <= chi);
    }
}

TEST_CASE("index is bracketed by the clique bound and the constructive coloring") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Graph g = random_claw_free_max4(6 + seed % 14, seed);
        const SolveResult r = injective_chromatic_index(g);
        CHECK(r.lower_bound <= r.chi);
        CHECK(r.chi <= static_cast<int>(color_claw_free(g).distinct_colors()));
    }
}

TEST_CASE("budget exhaustion is reported") {
    const Graph g = random_claw_free_max4(30, 5);
    const SolveResult r = injective_chromatic_index(g, 1);
    CHECK(r.nodes_explored <= 2);
    if (r.lower_bound < r.chi) CHECK(r.budget_exhausted);
    CHECK(verify(g, r.witness).valid);
}
