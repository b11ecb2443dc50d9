#include <doctest.h>

#include "helpers.hpp"
#include "injcolor/conflict.hpp"
#include "injcolor/generators.hpp"

using namespace injcolor;
using testing::make;

namespace {

PartialColoring coloring(const Graph& g, std::initializer_list<std::tuple<Vertex, Vertex, Color>> items, int k = 13) {
    PartialColoring phi(g.edge_count(), ColorPalette{k});
    for (auto [u, v, c] : items) phi.assign(g.edge_between(u, v).index, c);
    return phi;
}

}  // namespace

TEST_CASE("palette and partial coloring basics") {
    ColorPalette p{4};
    CHECK(p.contains(1));
    CHECK(p.contains(4));
    CHECK_FALSE(p.contains(0));
    CHECK_FALSE(p.contains(5));
    CHECK(p.all() == ColorSet{1, 2, 3, 4});

    PartialColoring phi(3, p);
    CHECK_FALSE(phi.is_total());
    CHECK_FALSE(phi.at(0).has_value());
    phi.assign(0, 2);
    phi.assign(2, 2);
    CHECK(phi.at(0) == 2);
    CHECK(phi.colored_count() == 2);
    CHECK(phi.distinct_colors() == 1);
    CHECK(phi.max_color() == 2);
    CHECK_THROWS_AS(phi.assign(1, 5), OutOfPalette);
    CHECK_THROWS_AS(phi.assign(1, 0), OutOfPalette);
    phi.assign(1, 4);
    CHECK(phi.is_total());
    phi.clear(1);
    CHECK_FALSE(phi.is_colored(1));
}

TEST_CASE("sees on a path and a triangle") {
    // Path 0-1-2-3: 01 and 23 are joined by 12; 01 and 12 share a vertex without a triangle.
    const Graph p = make({{0, 1}, {1, 2}, {2, 3}});
    CHECK(sees_reason(p, p.edge_between(0, 1), p.edge_between(2, 3)) == ConflictReason::DistanceTwo);
    CHECK_FALSE(sees(p, p.edge_between(0, 1), p.edge_between(1, 2)));
    CHECK_FALSE(sees(p, p.edge(0), p.edge(0)));

    const Graph t = make({{0, 1}, {1, 2}, {0, 2}});
    CHECK(sees_reason(t, t.edge_between(0, 1), t.edge_between(1, 2)) == ConflictReason::Triangle);
    CHECK(to_string(ConflictReason::Triangle) == "Triangle");
    CHECK(to_string(ConflictReason::DistanceTwo) == "DistanceTwo");
}

TEST_CASE("sees on disjoint edges without a connecting edge") {
    const Graph g = make({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_FALSE(sees(g, g.edge_between(0, 1), g.edge_between(3, 4)));
}

TEST_CASE("conflict graph of C4 is a perfect matching") {
    const Graph c4 = named_graph("cycle", 4);
    const Graph h = conflict_graph(c4);
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 2);
    CHECK(h.max_degree() == 1);
    // 01 (index 0) and 23 (index 3), 03 (index 1) and 12 (index 2).
    CHECK(h.adjacent(0, 3));
    CHECK(h.adjacent(1, 2));
}

TEST_CASE("conflict graph of K4 is complete") {
    const Graph h = conflict_graph(named_graph("k4"));
    CHECK(h.edge_count() == 15);
}

TEST_CASE("sees matches the line-graph definition and is symmetric") {
    SeededRng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + rng.below(9);
        const Graph g = testing::random_graph(rng, n, 2 * n + 2);
        const auto dist = testing::line_distances(g);
        const Graph h = conflict_graph(g);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            for (std::size_t j = 0; j < g.edge_count(); ++j) {
                const bool s = sees(g, g.edge(i), g.edge(j));
                CHECK(s == testing::sees_oracle(g, dist, i, j));
                CHECK(s == sees(g, g.edge(j), g.edge(i)));
                if (i != j) CHECK(s == h.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)));
            }
        }
    }
}

TEST_CASE("conflict degree is at most 18 when the max degree is at most 4") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Graph g = random_claw_free_max4(8 + seed % 20, seed);
        const Graph h = conflict_graph(g);
        CHECK(h.max_degree() <= 18);
    }
}

TEST_CASE("forbidden, available and incident sets") {
    // Triangle 012 with pendant 23.
    const Graph g = make({{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    const PartialColoring phi = coloring(g, {{0, 1, 1}, {1, 2, 2}}, 4);
    const EdgeRef e02 = g.edge_between(0, 2);
    CHECK(forbidden_set(g, phi, e02) == ColorSet{1, 2});
    CHECK(available_set(g, phi, e02) == ColorSet{3, 4});
    const EdgeRef e23 = g.edge_between(2, 3);
    // 23 sees 01 (joined through 12 and 02) but shares 2 with 12 without a triangle.
    CHECK(forbidden_set(g, phi, e23) == ColorSet{1});
    CHECK(incident_colors(g, phi, 2) == ColorSet{2});
    CHECK(incident_colors(g, phi, 3).empty());
}

TEST_CASE("forbidden and available partition the palette") {
    SeededRng rng(12);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = random_claw_free_max4(5 + rng.below(15), trial + 7);
        PartialColoring phi(g.edge_count(), ColorPalette{13});
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (rng.below(2) == 0) phi.assign(i, static_cast<Color>(1 + rng.below(13)));
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const ColorSet f = forbidden_set(g, phi, g.edge(i));
            const ColorSet a = available_set(g, phi, g.edge(i));
            CHECK(f.size() + a.size() == 13);
            CHECK(f.size() <= 18);
            for (Color c : a) CHECK_FALSE(f.contains(c));
        }
    }
}

TEST_CASE("verify examples") {
    const Graph p = make({{0, 1}, {1, 2}, {2, 3}});
    CHECK(verify(p, coloring(p, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}})).valid);
    const ConflictReport bad = verify(p, coloring(p, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}}));
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].first == p.edge_between(0, 1));
    CHECK(bad.violations[0].second == p.edge_between(2, 3));
    CHECK(bad.violations[0].reason == ConflictReason::DistanceTwo);
    CHECK(bad.colors_used == 2);

    const Graph t = make({{0, 1}, {1, 2}, {0, 2}});
    const ConflictReport tri = verify(t, coloring(t, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}}));
    REQUIRE(tri.violations.size() == 1);
    CHECK(tri.violations[0].reason == ConflictReason::Triangle);
}

TEST_CASE("verify of a partial coloring only checks colored pairs") {
    const Graph t = make({{0, 1}, {1, 2}, {0, 2}});
    CHECK(verify(t, coloring(t, {{0, 1, 1}})).valid);
    CHECK(verify(t, PartialColoring(3, ColorPalette{13})).valid);
}

TEST_CASE("verify equals proper coloring of the conflict graph") {
    SeededRng rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 3 + rng.below(8);
        const Graph g = testing::random_graph(rng, n, 2 * n);
        const Graph h = conflict_graph(g);
        PartialColoring phi(g.edge_count(), ColorPalette{5});
        for (std::size_t i = 0; i < g.edge_count(); ++i) phi.assign(i, static_cast<Color>(1 + rng.below(5)));
        bool proper = true;
        for (auto [a, b] : h.edge_list())
            if (phi.raw()[a] == phi.raw()[b]) proper = false;
        bool pairwise = true;
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            for (std::size_t j = i + 1; j < g.edge_count(); ++j)
                if (phi.raw()[i] == phi.raw()[j] && sees(g, g.edge(i), g.edge(j))) pairwise = false;
        const ConflictReport r = verify(g, phi);
        CHECK(r.valid == proper);
        CHECK(r.valid == pairwise);
        CHECK(verify(g, h, phi).valid == proper);
        for (std::size_t v = 1; v < r.violations.size(); ++v) {
            const auto& a = r.violations[v - 1];
            const auto& b = r.violations[v];
            CHECK(std::pair(a.first.index, a.second.index) < std::pair(b.first.index, b.second.index));
        }
    }
}

TEST_CASE("sees rejects edges not in the graph") {
    const Graph p = make({{0, 1}, {1, 2}});
    CHECK_THROWS_AS(sees(p, EdgeRef{0, 2, 0}, p.edge(0)), UnknownEdge);
}
