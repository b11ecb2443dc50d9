#pragma once

#include <algorithm>
#include <initializer_list>
#include <queue>
#include <utility>
#include <vector>

#include "injcolor/generators.hpp"
#include "injcolor/graph.hpp"

namespace testing {

using injcolor::Graph;
using injcolor::Vertex;

inline Graph make(std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    std::vector<std::pair<Vertex, Vertex>> v(edges);
    return Graph::from_edge_list(v);
}

inline Graph star(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(e);
}

// Two K4s on {0..3} and {4..7} joined by the matching i -- i+4.
inline Graph k4_prism() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex a = 0; a < 4; ++a)
        for (Vertex b = a + 1; b < 4; ++b) {
            e.emplace_back(a, b);
            e.emplace_back(a + 4, b + 4);
        }
    for (Vertex i = 0; i < 4; ++i) e.emplace_back(i, i + 4);
    return Graph::from_edge_list(e);
}

inline Graph random_graph(injcolor::SeededRng& rng, std::size_t n, std::size_t max_edges,
                          std::size_t max_degree = 1000) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    rng.shuffle(pairs);
    const std::size_t target = rng.below(max_edges + 1);
    std::vector<std::size_t> deg(n, 0);
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (auto [a, b] : pairs) {
        if (kept.size() >= target) break;
        if (deg[a] >= max_degree || deg[b] >= max_degree) continue;
        ++deg[a];
        ++deg[b];
        kept.emplace_back(a, b);
    }
    return Graph::from_edge_list(kept, n);
}

// Induced K_{1,3} by enumerating all 4-vertex subsets and all choices of center.
inline bool has_induced_claw_bruteforce(const Graph& g) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    const Vertex q[4] = {a, b, c, d};
                    int edges = 0;
                    int deg[4] = {0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges == 3 && std::max({deg[0], deg[1], deg[2], deg[3]}) == 3) return true;
                }
    return false;
}

// Distances in the line graph by BFS over edge indices.
inline std::vector<std::vector<int>> line_distances(const Graph& g) {
    const std::size_t m = g.edge_count();
    std::vector<std::vector<int>> dist(m, std::vector<int>(m, -1));
    auto shares = [&](std::size_t i, std::size_t j) {
        auto [a, b] = g.edge_list()[i];
        auto [c, d] = g.edge_list()[j];
        return a == c || a == d || b == c || b == d;
    };
    for (std::size_t s = 0; s < m; ++s) {
        std::queue<std::size_t> q;
        q.push(s);
        dist[s][s] = 0;
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            for (std::size_t y = 0; y < m; ++y)
                if (y != x && dist[s][y] < 0 && shares(x, y)) {
                    dist[s][y] = dist[s][x] + 1;
                    q.push(y);
                }
        }
    }
    return dist;
}

// Definition-level conflict: line-graph distance exactly 2, or two edges
// forming two sides of a triangle.
inline bool sees_oracle(const Graph& g, const std::vector<std::vector<int>>& dist, std::size_t i, std::size_t j) {
    if (i == j) return false;
    auto [a, b] = g.edge_list()[i];
    auto [c, d] = g.edge_list()[j];
    if (dist[i][j] == 1) {
        // The two non-shared endpoints.
        std::vector<Vertex> ends{a, b, c, d};
        std::sort(ends.begin(), ends.end());
        std::vector<Vertex> single;
        for (std::size_t t = 0; t < 4; ++t) {
            const bool dup = (t > 0 && ends[t] == ends[t - 1]) || (t + 1 < 4 && ends[t] == ends[t + 1]);
            if (!dup) single.push_back(ends[t]);
        }
        return g.adjacent(single[0], single[1]);
    }
    return dist[i][j] == 2 && a != c && a != d && b != c && b != d;
}

}  // namespace testing
