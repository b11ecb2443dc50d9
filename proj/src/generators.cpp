#include "injcolor/generators.hpp"

#include <algorithm>
#include <limits>

namespace injcolor {

std::uint64_t SeededRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SeededRng::below needs a positive bound");
    const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = top - (top % bound + 1) % bound;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return x % bound;
}

UnknownName::UnknownName(const std::string& name) : std::invalid_argument("unknown name '" + name + "'") {}

Graph line_graph(const Graph& h) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t x = 0; x < h.vertex_count(); ++x) {
        auto inc = h.incident_edges(static_cast<Vertex>(x));
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                pairs.emplace_back(static_cast<Vertex>(inc[i]), static_cast<Vertex>(inc[j]));
    }
    // Simple host graphs never produce the same pair twice.
    return Graph::from_edge_list(pairs, h.edge_count());
}

namespace {

std::vector<std::pair<Vertex, Vertex>> shuffled_pairs(std::size_t n, SeededRng& rng) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    rng.shuffle(pairs);
    return pairs;
}

// Whether some three neighbors of c are pairwise non-adjacent.
bool has_claw_at(const std::vector<std::vector<bool>>& adj, std::size_t c) {
    std::vector<std::size_t> nb;
    for (std::size_t y = 0; y < adj.size(); ++y)
        if (adj[c][y]) nb.push_back(y);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (adj[nb[i]][nb[j]]) continue;
            for (std::size_t k = j + 1; k < nb.size(); ++k)
                if (!adj[nb[i]][nb[k]] && !adj[nb[j]][nb[k]]) return true;
        }
    return false;
}

}  // namespace

Graph random_subcubic(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_subcubic needs n >= 1");
    SeededRng rng(seed);
    const auto pairs = shuffled_pairs(n, rng);
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<std::pair<Vertex, Vertex>> kept;

    // Endpoints within distance 3 of each other, i.e. the edge would close a
    // cycle shorter than 5.
    auto close = [&](Vertex a, Vertex b) {
        std::vector<int> dist(n, -1);
        std::vector<Vertex> frontier{a};
        dist[a] = 0;
        for (int d = 1; d <= 3 && !frontier.empty(); ++d) {
            std::vector<Vertex> next;
            for (Vertex x : frontier)
                for (Vertex y : adj[x])
                    if (dist[y] < 0) {
                        if (y == b) return true;
                        dist[y] = d;
                        next.push_back(y);
                    }
            frontier = std::move(next);
        }
        return false;
    };
    auto insert = [&](Vertex a, Vertex b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        kept.emplace_back(a, b);
    };

    for (auto [a, b] : pairs)
        if (adj[a].size() < 3 && adj[b].size() < 3 && !close(a, b)) insert(a, b);
    for (auto [a, b] : pairs)
        if (adj[a].size() < 3 && adj[b].size() < 3 &&
            std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end())
            insert(a, b);
    return Graph::from_edge_list(kept, n);
}

Graph random_claw_free_subcubic(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_claw_free_subcubic needs n >= 1");
    SeededRng rng(seed);
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<std::pair<Vertex, Vertex>> kept;
    auto fits = [&](Vertex a, Vertex b) {
        const std::size_t da = adj[a].size() + 1, db = adj[b].size() + 1;
        if (da > 3 || db > 3 || da + db > 5) return false;
        for (Vertex x : adj[a])
            if (da + adj[x].size() > 5) return false;
        for (Vertex x : adj[b])
            if (db + adj[x].size() > 5) return false;
        return true;
    };
    for (auto [a, b] : shuffled_pairs(n, rng))
        if (fits(a, b)) {
            adj[a].push_back(b);
            adj[b].push_back(a);
            kept.emplace_back(a, b);
        }
    const Graph line = line_graph(Graph::from_edge_list(kept, n));

    // Largest component by vertex count, found by flood fill in id order.
    std::vector<int> comp(line.vertex_count(), -1);
    std::vector<std::size_t> sizes;
    for (std::size_t s = 0; s < line.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(sizes.size());
        std::vector<Vertex> stack{static_cast<Vertex>(s)};
        comp[s] = id;
        std::size_t size = 0;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex y : line.neighbors(x))
                if (comp[y] < 0) {
                    comp[y] = id;
                    stack.push_back(y);
                }
        }
        sizes.push_back(size);
    }
    if (sizes.empty()) return line;
    const int best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<Vertex> drop;
    for (std::size_t x = 0; x < comp.size(); ++x)
        if (comp[x] != best) drop.push_back(static_cast<Vertex>(x));
    return delete_vertices(line, drop).graph;
}

Graph random_claw_free_max4(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_claw_free_max4 needs n >= 1");
    SeededRng rng(seed);
    std::vector<int> degree(n, 0);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (auto [a, b] : shuffled_pairs(n, rng)) {
        if (degree[a] >= 4 || degree[b] >= 4) continue;
        adj[a][b] = adj[b][a] = true;
        // A new edge can only create claws centered at its endpoints.
        if (has_claw_at(adj, a) || has_claw_at(adj, b)) {
            adj[a][b] = adj[b][a] = false;
            continue;
        }
        ++degree[a];
        ++degree[b];
        kept.emplace_back(a, b);
    }
    return Graph::from_edge_list(kept, n);
}

namespace {

Graph complete(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return Graph::from_edge_list(e);
}

Graph petersen() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edge_list(e);
}

}  // namespace

const std::vector<std::string>& named_graph_names() {
    static const std::vector<std::string> names{"k4",    "k5",         "c6bar",         "cycle",
                                                "path",  "octahedron", "line-petersen", "line-k33"};
    return names;
}

Graph named_graph(const std::string& name, std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    if (name == "k4") return complete(4);
    if (name == "k5") return complete(5);
    if (name == "c6bar") {
        for (Vertex a = 0; a < 6; ++a)
            for (Vertex b = a + 1; b < 6; ++b)
                if (b - a != 1 && b - a != 5) e.emplace_back(a, b);
        return Graph::from_edge_list(e);
    }
    if (name == "cycle") {
        if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
        for (std::size_t i = 0; i < n; ++i)
            e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
        return Graph::from_edge_list(e);
    }
    if (name == "path") {
        if (n < 1) throw std::invalid_argument("path needs n >= 1");
        for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
        return Graph::from_edge_list(e, n);
    }
    if (name == "octahedron") {
        // K_{2,2,2}: 2i and 2i+1 form the missing perfect matching.
        for (Vertex a = 0; a < 6; ++a)
            for (Vertex b = a + 1; b < 6; ++b)
                if (a / 2 != b / 2) e.emplace_back(a, b);
        return Graph::from_edge_list(e);
    }
    if (name == "line-petersen") return line_graph(petersen());
    if (name == "line-k33") {
        for (Vertex a = 0; a < 3; ++a)
            for (Vertex b = 3; b < 6; ++b) e.emplace_back(a, b);
        return line_graph(Graph::from_edge_list(e));
    }
    throw UnknownName(name);
}

std::string to_string(Family f) {
    switch (f) {
        case Family::LineSubcubic: return "line-subcubic";
        case Family::ClawFreeMax4: return "clawfree-max4";
        case Family::Named: return "named";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "line-subcubic") return Family::LineSubcubic;
    if (s == "clawfree-max4") return Family::ClawFreeMax4;
    if (s == "named") return Family::Named;
    throw UnknownName(s);
}

Graph generate(const GenSpec& spec) {
    Graph g;
    switch (spec.family) {
        case Family::LineSubcubic: g = line_graph(random_subcubic(spec.n, spec.seed)); break;
        case Family::ClawFreeMax4: g = random_claw_free_max4(spec.n, spec.seed); break;
        case Family::Named: return named_graph(spec.name, spec.n);
    }
    if (!is_claw_free(g) || g.max_degree() > 4)
        throw std::logic_error("generated graph violates the " + to_string(spec.family) + " contract");
    return g;
}

std::string manifest_line(const GenSpec& spec) {
    std::string s = "# family=" + to_string(spec.family) + " n=" + std::to_string(spec.n) +
                    " seed=" + std::to_string(spec.seed);
    if (spec.family == Family::Named) s += " name=" + spec.name;
    return s;
}

}  // namespace injcolor
