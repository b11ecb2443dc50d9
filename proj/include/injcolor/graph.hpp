#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace injcolor {

using Vertex = int;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SelfLoop : public GraphError {
public:
    explicit SelfLoop(Vertex x);
};

class DuplicateEdge : public GraphError {
public:
    DuplicateEdge(Vertex u, Vertex v);
};

class UnknownEdge : public GraphError {
public:
    UnknownEdge(Vertex u, Vertex v);
};

class UnknownVertex : public GraphError {
public:
    explicit UnknownVertex(Vertex x);
};

/// An edge of a specific Graph: endpoints normalized so that u < v, plus its
/// position in the graph's canonical (lexicographically sorted) edge list.
struct EdgeRef {
    Vertex u = 0;
    Vertex v = 0;
    std::size_t index = 0;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

/// Center adjacent to three pairwise non-adjacent leaves, i.e. an induced K_{1,3}.
struct ClawWitness {
    Vertex center = 0;
    std::array<Vertex, 3> leaves{};
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Neighbor lists are kept sorted and the edge list is sorted
/// lexicographically over pairs (u, v) with u < v, so edge indices are stable
/// for a given graph and can be used as keys for colorings.
class Graph {
public:
    Graph() = default;

    /// Builds a graph with exactly the given edges. The vertex count is
    /// 1 + the largest id mentioned, or `min_vertices` if that is larger.
    /// Throws SelfLoop / DuplicateEdge.
    static Graph from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs,
                                std::size_t min_vertices = 0);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    const std::vector<Vertex>& neighbors(Vertex x) const;
    std::size_t degree(Vertex x) const { return neighbors(x).size(); }
    std::size_t max_degree() const;

    bool has_vertex(Vertex x) const {
        return x >= 0 && static_cast<std::size_t>(x) < adjacency_.size();
    }
    bool adjacent(Vertex a, Vertex b) const;

    const std::vector<std::pair<Vertex, Vertex>>& edge_list() const { return edges_; }
    EdgeRef edge(std::size_t index) const;
    std::optional<EdgeRef> find_edge(Vertex a, Vertex b) const;
    /// Like find_edge but throws UnknownEdge.
    EdgeRef edge_between(Vertex a, Vertex b) const;
    /// Indices of the edges incident to x, ascending.
    std::vector<std::size_t> incident_edges(Vertex x) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

/// Induced subgraph together with the bookkeeping needed to move colorings
/// between the host and the subgraph. Surviving vertices are renumbered
/// densely in their original order, so canonical edge order is preserved.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> host_vertex;          // new id -> host id
    std::vector<Vertex> vertex_map;           // host id -> new id, or -1
    std::vector<std::ptrdiff_t> edge_map;     // host edge index -> new index, or -1
};

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// First claw in lexicographic (center, leaves) order, or nothing.
std::optional<ClawWitness> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

/// Common neighbors of the endpoints of e. Throws UnknownEdge.
std::vector<Vertex> triangle_apexes(const Graph& g, const EdgeRef& e);

/// Number of 3-cycles through x, i.e. |E(G[N(x)])|.
std::size_t incident_triangle_count(const Graph& g, Vertex x);

/// Lexicographically smallest set of four mutually adjacent vertices.
std::optional<std::array<Vertex, 4>> find_k4(const Graph& g);

/// Lexicographically smallest (x, y, u, v) such that x-y-u-v-x is a cycle.
/// Chords are allowed.
std::optional<std::array<Vertex, 4>> find_four_cycle(const Graph& g);

}  // namespace injcolor
