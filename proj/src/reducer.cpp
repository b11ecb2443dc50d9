#include "injcolor/reducer.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace injcolor {

namespace {

std::string join(const std::vector<Vertex>& xs) {
    std::string s;
    for (Vertex x : xs) {
        if (!s.empty()) s += ' ';
        s += std::to_string(x);
    }
    return s;
}

[[noreturn]] void violation(ReductionKind stage, const std::string& what, std::vector<Vertex> witness) {
    throw StructureViolation(stage, what, std::move(witness));
}

std::vector<Vertex> other_neighbors(const Graph& g, Vertex x, std::initializer_list<Vertex> skip) {
    std::vector<Vertex> out;
    for (Vertex y : g.neighbors(x))
        if (std::find(skip.begin(), skip.end(), y) == skip.end()) out.push_back(y);
    return out;
}

void check_class(const Graph& g) {
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
        if (g.degree(static_cast<Vertex>(x)) > 4)
            throw PreconditionFailed(static_cast<Vertex>(x), g.degree(static_cast<Vertex>(x)));
    if (auto claw = find_claw(g)) throw PreconditionFailed(*claw);
}

std::optional<ReductionStep> find_low_degree(const Graph& g) {
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        const std::size_t d = g.degree(static_cast<Vertex>(x));
        if (d >= 1 && d <= 3) {
            const auto v = static_cast<Vertex>(x);
            return ReductionStep{ReductionKind::Deg3, {v}, {v}, {}, {}, {}};
        }
    }
    return std::nullopt;
}

std::optional<ReductionStep> find_k4_step(const Graph& g) {
    auto k4 = find_k4(g);
    if (!k4) return std::nullopt;
    const auto& q = *k4;

    // Every vertex has degree 4 here, so each K4 vertex has one outside neighbor.
    std::array<Vertex, 4> outside{};
    for (int i = 0; i < 4; ++i) {
        auto rest = other_neighbors(g, q[i], {q[0], q[1], q[2], q[3]});
        if (rest.size() != 1)
            violation(ReductionKind::K4Shared, "K4 vertex without a unique outside neighbor",
                      {q[0], q[1], q[2], q[3]});
        outside[i] = rest.front();
    }

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (outside[i] != outside[j]) continue;
            // Relabel so the coinciding pair is (v1, v2).
            std::vector<Vertex> labels{q[i], q[j]};
            for (int t = 0; t < 4; ++t)
                if (t != i && t != j) labels.push_back(q[t]);
            labels.push_back(outside[i]);
            return ReductionStep{ReductionKind::K4Shared, {q[i]}, labels, {}, {}, {}};
        }

    std::vector<Vertex> labels(q.begin(), q.end());
    labels.insert(labels.end(), outside.begin(), outside.end());
    return ReductionStep{ReductionKind::K4Distinct, {q.begin(), q.end()}, labels, {}, {}, {}};
}

std::optional<ReductionStep> find_three_triangles(const Graph& g) {
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        const auto v = static_cast<Vertex>(x);
        if (g.degree(v) == 4 && incident_triangle_count(g, v) >= 3)
            return ReductionStep{ReductionKind::ThreeTriangles, {v}, {v}, {}, {}, {}};
    }
    return std::nullopt;
}

// Once the earlier stages are exhausted every non-isolated vertex has degree
// 4 and its neighborhood induces exactly two disjoint edges.
void check_two_disjoint_triangles(const Graph& g, ReductionKind stage) {
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        const auto v = static_cast<Vertex>(x);
        const auto& nb = g.neighbors(v);
        if (nb.empty()) continue;
        if (nb.size() != 4) violation(stage, "vertex of degree " + std::to_string(nb.size()), {v});
        std::vector<Vertex> touched;
        std::size_t inner = 0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (g.adjacent(nb[i], nb[j])) {
                    ++inner;
                    touched.push_back(nb[i]);
                    touched.push_back(nb[j]);
                }
        std::sort(touched.begin(), touched.end());
        const bool disjoint = std::adjacent_find(touched.begin(), touched.end()) == touched.end();
        if (inner != 2 || !disjoint)
            violation(stage, "vertex not in exactly two edge-disjoint triangles", {v});
    }
}

std::optional<ReductionStep> find_four_cycle_step(const Graph& g) {
    auto cyc = find_four_cycle(g);
    if (!cyc) return std::nullopt;
    const auto [x, y, u, v] = *cyc;
    const std::vector<Vertex> witness{x, y, u, v};

    // The unique triangle apex over a cycle edge; it must lie off the cycle.
    auto apex = [&](Vertex a, Vertex b) {
        auto common = triangle_apexes(g, g.edge_between(a, b));
        if (common.size() != 1 || std::find(witness.begin(), witness.end(), common[0]) != witness.end())
            violation(ReductionKind::FourCycle, "4-cycle edge without a single outside triangle apex",
                      witness);
        return common[0];
    };
    const Vertex x1 = apex(x, y);
    const Vertex y1 = apex(y, u);
    const Vertex u1 = apex(u, v);
    const Vertex v1 = apex(v, x);
    if (y1 == u1) violation(ReductionKind::FourCycle, "apexes of yu and uv coincide", witness);

    auto far_pair = [&](Vertex apex_vertex, Vertex a, Vertex b) {
        auto rest = other_neighbors(g, apex_vertex, {a, b});
        if (rest.size() != 2 || !g.adjacent(rest[0], rest[1]))
            violation(ReductionKind::FourCycle, "apex whose far neighbors are not adjacent",
                      {apex_vertex});
        return rest;
    };
    auto ys = far_pair(y1, y, u);
    auto us = far_pair(u1, u, v);

    // Shared far neighbor goes to y1'' = u1'.
    bool shared = false;
    for (int i = 0; i < 2 && !shared; ++i)
        for (int j = 0; j < 2 && !shared; ++j)
            if (ys[i] == us[j]) {
                if (i == 0) std::swap(ys[0], ys[1]);
                if (j == 1) std::swap(us[0], us[1]);
                shared = true;
            }
    std::vector<Vertex> deleted{y, y1, u, v, u1};
    std::vector<Vertex> labels{x, y, u, v, x1, y1, u1, v1, ys[0], ys[1], us[0], us[1]};
    std::sort(deleted.begin(), deleted.end());
    return ReductionStep{ReductionKind::FourCycle, deleted, labels, {}, {}, {}};
}

ReductionStep final_config(const Graph& g) {
    Vertex v = -1;
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
        if (g.degree(static_cast<Vertex>(x)) > 0) {
            v = static_cast<Vertex>(x);
            break;
        }
    assert(v >= 0);

    const auto& nb = g.neighbors(v);
    std::array<Vertex, 4> u{nb[0], -1, -1, -1};
    std::vector<Vertex> rest;
    for (std::size_t i = 1; i < 4; ++i) {
        if (u[1] < 0 && g.adjacent(nb[0], nb[i]))
            u[1] = nb[i];
        else
            rest.push_back(nb[i]);
    }
    if (u[1] < 0 || !g.adjacent(rest[0], rest[1]))
        violation(ReductionKind::FinalConfig, "neighborhood is not two disjoint edges", {v});
    u[2] = rest[0];
    u[3] = rest[1];

    std::vector<Vertex> labels{v, u[0], u[1], u[2], u[3]};
    std::array<Vertex, 4> xs{}, ys{};
    for (int i = 0; i < 4; ++i) {
        const Vertex partner = u[i ^ 1];
        auto far = other_neighbors(g, u[i], {v, partner});
        if (far.size() != 2 || !g.adjacent(far[0], far[1]))
            violation(ReductionKind::FinalConfig, "u_i whose far neighbors are not adjacent", {u[i]});
        xs[i] = far[0];
        ys[i] = far[1];
        labels.push_back(xs[i]);
        labels.push_back(ys[i]);
    }

    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (u[i] == xs[j] || u[i] == ys[j])
                violation(ReductionKind::FinalConfig, "u_i coincides with a far vertex", labels);
            if (i != j && xs[i] == xs[j])
                violation(ReductionKind::FinalConfig, "x_i coincides with x_j", labels);
        }
        if (xs[i] == ys[i]) violation(ReductionKind::FinalConfig, "x_i coincides with y_i", labels);
    }

    std::vector<Vertex> deleted{v, u[0], u[1], u[2], u[3]};
    std::sort(deleted.begin(), deleted.end());
    return ReductionStep{ReductionKind::FinalConfig, deleted, labels, {}, {}, {}};
}

}  // namespace

std::string_view to_string(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::Deg3: return "Deg3";
        case ReductionKind::K4Shared: return "K4Shared";
        case ReductionKind::K4Distinct: return "K4Distinct";
        case ReductionKind::ThreeTriangles: return "ThreeTriangles";
        case ReductionKind::FourCycle: return "FourCycle";
        case ReductionKind::FinalConfig: return "FinalConfig";
    }
    return "?";
}

StructureViolation::StructureViolation(ReductionKind stage_, const std::string& message,
                                       std::vector<Vertex> witness_)
    : std::runtime_error(std::string(to_string(stage_)) + ": " + message + " [" + join(witness_) + "]"),
      stage(stage_),
      witness(std::move(witness_)) {}

PreconditionFailed::PreconditionFailed(ClawWitness c)
    : std::runtime_error("graph has a claw centered at " + std::to_string(c.center) + " with leaves " +
                         join({c.leaves[0], c.leaves[1], c.leaves[2]})),
      claw(c) {}

PreconditionFailed::PreconditionFailed(Vertex vertex, std::size_t degree)
    : std::runtime_error("vertex " + std::to_string(vertex) + " has degree " +
                         std::to_string(degree) + " > 4"),
      high_degree_vertex(vertex) {}

InternalUnextendable::InternalUnextendable(ReductionKind stage_, std::size_t level)
    : std::runtime_error("extension failed after escalation at " + std::string(to_string(stage_)) +
                         " (reduction level " + std::to_string(level) + ")"),
      stage(stage_) {}

ReductionStep find_reduction(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("find_reduction needs a graph with edges");
    check_class(g);

    std::optional<ReductionStep> step = find_low_degree(g);
    if (!step) step = find_k4_step(g);
    if (!step) step = find_three_triangles(g);
    if (!step) {
        check_two_disjoint_triangles(g, ReductionKind::FourCycle);
        step = find_four_cycle_step(g);
    }
    if (!step) step = final_config(g);
    frontier_for(g, *step);
    return *step;
}

void frontier_for(const Graph& g, ReductionStep& step) {
    step.frontier.clear();
    for (Vertex x : step.deleted) {
        auto inc = g.incident_edges(x);
        step.frontier.insert(step.frontier.end(), inc.begin(), inc.end());
    }
    std::sort(step.frontier.begin(), step.frontier.end());
    step.frontier.erase(std::unique(step.frontier.begin(), step.frontier.end()), step.frontier.end());

    step.order_hint.clear();
    step.escalation.clear();
    const auto& l = step.labels;
    auto e = [&](Vertex a, Vertex b) { return g.edge_between(a, b).index; };
    switch (step.kind) {
        case ReductionKind::Deg3:
        case ReductionKind::K4Shared:
            break;
        case ReductionKind::K4Distinct:
            // v1..v4 = l[0..3], u1..u4 = l[4..7]
            step.order_hint = {e(l[0], l[3]), e(l[0], l[1]), e(l[1], l[2]), e(l[2], l[3]),
                               e(l[0], l[2]), e(l[1], l[3]), e(l[3], l[7]), e(l[1], l[5]),
                               e(l[2], l[6]), e(l[0], l[4])};
            break;
        case ReductionKind::ThreeTriangles: {
            const auto& nb = g.neighbors(l[0]);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (auto f = g.find_edge(nb[i], nb[j])) step.escalation.push_back(f->index);
            break;
        }
        case ReductionKind::FourCycle: {
            const Vertex x = l[0], y = l[1], u = l[2], v = l[3], x1 = l[4], y1 = l[5], u1 = l[6],
                         v1 = l[7], y1a = l[8], y1b = l[9], u1a = l[10], u1b = l[11];
            step.order_hint = {e(y, u),    e(u, v),    e(u, y1),  e(u, u1), e(y1, y1a),
                               e(y1, y1b), e(u1, u1a), e(u1, u1b), e(y, x1), e(v, v1),
                               e(y, x),    e(x, v),    e(y, y1),  e(v, u1)};
            break;
        }
        case ReductionKind::FinalConfig: {
            const Vertex v = l[0];
            const Vertex* u = &l[1];
            const Vertex* far = &l[5];  // x1 y1 x2 y2 ...
            step.order_hint = {e(v, u[0]), e(v, u[2])};
            for (int i = 0; i < 4; ++i) {
                step.order_hint.push_back(e(u[i], far[2 * i]));
                step.order_hint.push_back(e(u[i], far[2 * i + 1]));
            }
            step.order_hint.insert(step.order_hint.end(),
                                   {e(v, u[1]), e(v, u[3]), e(u[0], u[1]), e(u[2], u[3])});
            break;
        }
    }
}

namespace {

class FrontierSearch {
public:
    FrontierSearch(const Graph& g, PartialColoring& phi, std::span<const std::size_t> frontier,
                   std::span<const std::size_t> order_hint)
        : phi_(phi), k_(phi.palette().k), edges_(frontier.begin(), frontier.end()) {
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        slot_of_.assign(g.edge_count(), -1);
        for (std::size_t s = 0; s < edges_.size(); ++s) {
            slot_of_[edges_[s]] = static_cast<int>(s);
            phi_.clear(edges_[s]);
        }
        for (std::size_t e : order_hint)
            if (e < slot_of_.size() && slot_of_[e] >= 0) hint_.push_back(slot_of_[e]);

        const std::size_t n = edges_.size();
        blocked_.assign(n * (k_ + 1), 0);
        available_.assign(n, k_);
        links_.resize(n);
        color_.assign(n, 0);
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t f : conflict_neighbors(g, edges_[s])) {
                if (slot_of_[f] >= 0)
                    links_[s].push_back(slot_of_[f]);
                else if (phi_.is_colored(f))
                    block(s, phi_.raw()[f]);
            }
    }

    bool run() {
        for (int a : available_)
            if (a == 0) return false;
        return search(0);
    }

    std::size_t nodes() const { return nodes_; }

private:
    int& blocked(std::size_t s, Color c) { return blocked_[s * (k_ + 1) + c]; }

    void block(std::size_t s, Color c) {
        if (blocked(s, c)++ == 0) --available_[s];
    }
    void unblock(std::size_t s, Color c) {
        if (--blocked(s, c) == 0) ++available_[s];
    }

    int pick() const {
        for (int s : hint_)
            if (color_[s] == 0) return s;
        int best = -1;
        for (std::size_t s = 0; s < edges_.size(); ++s)
            if (color_[s] == 0 && (best < 0 || available_[s] < available_[best]))
                best = static_cast<int>(s);
        return best;
    }

    bool search(std::size_t depth) {
        if (depth == edges_.size()) {
            for (std::size_t s = 0; s < edges_.size(); ++s) phi_.assign(edges_[s], color_[s]);
            return true;
        }
        const int s = pick();
        for (Color c = 1; c <= k_; ++c) {
            if (blocked(s, c) != 0) continue;
            ++nodes_;
            color_[s] = c;
            bool wiped = false;
            for (int t : links_[s])
                if (color_[t] == 0) {
                    block(t, c);
                    if (available_[t] == 0) wiped = true;
                }
            if (!wiped && search(depth + 1)) return true;
            for (int t : links_[s])
                if (color_[t] == 0) unblock(t, c);
            color_[s] = 0;
        }
        return false;
    }

    PartialColoring& phi_;
    int k_;
    std::vector<std::size_t> edges_;
    std::vector<int> slot_of_;
    std::vector<int> hint_;
    std::vector<int> blocked_;
    std::vector<int> available_;
    std::vector<std::vector<int>> links_;
    std::vector<Color> color_;
    std::size_t nodes_ = 0;
};

}  // namespace

PartialColoring extend(const Graph& g, PartialColoring phi, std::span<const std::size_t> frontier,
                       std::span<const std::size_t> order_hint, ExtendStats* stats) {
    if (phi.size() != g.edge_count())
        throw std::invalid_argument("coloring does not match graph edge count");
    FrontierSearch search(g, phi, frontier, order_hint);
    const bool ok = search.run();
    if (stats) stats->nodes += search.nodes();
    if (!ok)
        throw Unextendable("no extension over " + std::to_string(frontier.size()) +
                           " frontier edges with " + std::to_string(phi.palette().k) + " colors");
    return phi;
}

PartialColoring color_claw_free(const Graph& g, int k, ReductionTrace* trace) {
    check_class(g);
    const ColorPalette palette(k);

    struct Level {
        const Graph* host;
        ReductionStep step;
        Subgraph sub;
    };
    // deque keeps each level's subgraph at a stable address for the next level.
    std::deque<Level> levels;
    const Graph* current = &g;
    while (!current->empty()) {
        ReductionStep step = find_reduction(*current);
        Subgraph sub = delete_vertices(*current, step.deleted);
        assert(sub.graph.max_degree() <= 4 && is_claw_free(sub.graph));
        levels.push_back({current, std::move(step), std::move(sub)});
        current = &levels.back().sub.graph;
    }

    PartialColoring phi(0, palette);
    for (std::size_t i = levels.size(); i-- > 0;) {
        const Level& level = levels[i];
        const Graph& host = *level.host;
        PartialColoring lifted(host.edge_count(), palette);
        for (std::size_t e = 0; e < host.edge_count(); ++e)
            if (level.sub.edge_map[e] >= 0)
                if (auto c = phi.at(static_cast<std::size_t>(level.sub.edge_map[e])))
                    lifted.assign(e, *c);

        if (trace) ++trace->stage_counts[static_cast<std::size_t>(level.step.kind)];
        ExtendStats stats;
        try {
            phi = extend(host, lifted, level.step.frontier, level.step.order_hint, &stats);
        } catch (const Unextendable&) {
            if (level.step.escalation.empty()) throw InternalUnextendable(level.step.kind, i);
            std::vector<std::size_t> wider = level.step.frontier;
            wider.insert(wider.end(), level.step.escalation.begin(), level.step.escalation.end());
            if (trace) ++trace->escalations;
            try {
                phi = extend(host, lifted, wider, level.step.order_hint, &stats);
            } catch (const Unextendable&) {
                throw InternalUnextendable(level.step.kind, i);
            }
        }
        if (trace) {
            trace->extend_nodes += stats.nodes;
            trace->max_extend_nodes = std::max(trace->max_extend_nodes, stats.nodes);
        }
    }
    if (levels.empty()) return PartialColoring(g.edge_count(), palette);
    return phi;
}

PartialColoring color_greedy(const Graph& g, int k) {
    const Graph conflicts = conflict_graph(g);
    std::vector<Color> colors(g.edge_count(), 0);
    Color top = 0;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        std::vector<bool> used;
        for (Vertex j : conflicts.neighbors(static_cast<Vertex>(i))) {
            const Color c = colors[static_cast<std::size_t>(j)];
            if (c == 0) continue;
            if (used.size() <= static_cast<std::size_t>(c)) used.resize(c + 1, false);
            used[c] = true;
        }
        Color c = 1;
        while (static_cast<std::size_t>(c) < used.size() && used[c]) ++c;
        colors[i] = c;
        top = std::max(top, c);
    }
    PartialColoring phi(g.edge_count(), ColorPalette(std::max(k, std::max(top, 1))));
    for (std::size_t i = 0; i < colors.size(); ++i) phi.assign(i, colors[i]);
    return phi;
}

}  // namespace injcolor
