#include "injcolor/graph.hpp"

#include <algorithm>

namespace injcolor {

SelfLoop::SelfLoop(Vertex x)
    : GraphError("self-loop at vertex " + std::to_string(x)) {}

DuplicateEdge::DuplicateEdge(Vertex u, Vertex v)
    : GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v)) {}

UnknownEdge::UnknownEdge(Vertex u, Vertex v)
    : GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v)) {}

UnknownVertex::UnknownVertex(Vertex x)
    : GraphError("no vertex " + std::to_string(x)) {}

Graph Graph::from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs,
                            std::size_t min_vertices) {
    Graph g;
    std::size_t n = min_vertices;
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0) throw UnknownVertex(std::min(a, b));
        if (a == b) throw SelfLoop(a);
        n = std::max(n, static_cast<std::size_t>(std::max(a, b)) + 1);
        g.edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) throw DuplicateEdge(dup->first, dup->second);

    g.adjacency_.resize(n);
    for (auto [a, b] : g.edges_) {
        g.adjacency_[a].push_back(b);
        g.adjacency_[b].push_back(a);
    }
    for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
    return g;
}

const std::vector<Vertex>& Graph::neighbors(Vertex x) const {
    if (!has_vertex(x)) throw UnknownVertex(x);
    return adjacency_[x];
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (const auto& nb : adjacency_) d = std::max(d, nb.size());
    return d;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b)) return false;
    const auto& nb = adjacency_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
}

EdgeRef Graph::edge(std::size_t index) const {
    if (index >= edges_.size()) throw UnknownEdge(-1, -1);
    return {edges_[index].first, edges_[index].second, index};
}

std::optional<EdgeRef> Graph::find_edge(Vertex a, Vertex b) const {
    const std::pair<Vertex, Vertex> key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return EdgeRef{key.first, key.second, static_cast<std::size_t>(it - edges_.begin())};
}

EdgeRef Graph::edge_between(Vertex a, Vertex b) const {
    auto e = find_edge(a, b);
    if (!e) throw UnknownEdge(a, b);
    return *e;
}

std::vector<std::size_t> Graph::incident_edges(Vertex x) const {
    std::vector<std::size_t> out;
    for (Vertex y : neighbors(x)) out.push_back(find_edge(x, y)->index);
    std::sort(out.begin(), out.end());
    return out;
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> gone(n, false);
    for (Vertex x : removed) {
        if (!g.has_vertex(x)) throw UnknownVertex(x);
        gone[x] = true;
    }

    Subgraph sub;
    sub.vertex_map.assign(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
        if (gone[x]) continue;
        sub.vertex_map[x] = static_cast<Vertex>(sub.host_vertex.size());
        sub.host_vertex.push_back(static_cast<Vertex>(x));
    }

    // Renumbering is monotone, so surviving edges stay in canonical order and
    // their new index is just their rank among survivors.
    std::vector<std::pair<Vertex, Vertex>> kept;
    sub.edge_map.assign(g.edge_count(), -1);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto [a, b] = g.edge_list()[i];
        if (gone[a] || gone[b]) continue;
        sub.edge_map[i] = static_cast<std::ptrdiff_t>(kept.size());
        kept.emplace_back(sub.vertex_map[a], sub.vertex_map[b]);
    }
    sub.graph = Graph::from_edge_list(kept, sub.host_vertex.size());
    return sub;
}

std::optional<ClawWitness> find_claw(const Graph& g) {
    for (std::size_t c = 0; c < g.vertex_count(); ++c) {
        const auto& nb = g.neighbors(static_cast<Vertex>(c));
        const std::size_t d = nb.size();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < d; ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
                        return ClawWitness{static_cast<Vertex>(c), {nb[i], nb[j], nb[k]}};
            }
    }
    return std::nullopt;
}

std::vector<Vertex> triangle_apexes(const Graph& g, const EdgeRef& e) {
    if (!g.find_edge(e.u, e.v)) throw UnknownEdge(e.u, e.v);
    const auto& a = g.neighbors(e.u);
    const auto& b = g.neighbors(e.v);
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common;
}

std::size_t incident_triangle_count(const Graph& g, Vertex x) {
    const auto& nb = g.neighbors(x);
    std::size_t count = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.adjacent(nb[i], nb[j])) ++count;
    return count;
}

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g) {
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        const auto& na = g.neighbors(static_cast<Vertex>(a));
        for (Vertex b : na) {
            if (b <= static_cast<Vertex>(a)) continue;
            for (Vertex c : na) {
                if (c <= b || !g.adjacent(b, c)) continue;
                for (Vertex d : na) {
                    if (d <= c || !g.adjacent(b, d) || !g.adjacent(c, d)) continue;
                    return std::array<Vertex, 4>{static_cast<Vertex>(a), b, c, d};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<Vertex, 4>> find_four_cycle(const Graph& g) {
    for (std::size_t xi = 0; xi < g.vertex_count(); ++xi) {
        const auto x = static_cast<Vertex>(xi);
        for (Vertex y : g.neighbors(x))
            for (Vertex u : g.neighbors(y)) {
                if (u == x) continue;
                for (Vertex v : g.neighbors(u))
                    if (v != x && v != y && g.adjacent(v, x))
                        return std::array<Vertex, 4>{x, y, u, v};
            }
    }
    return std::nullopt;
}

}  // namespace injcolor
