#include "injcolor/conflict.hpp"

#include <algorithm>

namespace injcolor {

OutOfPalette::OutOfPalette(Color c, int k)
    : std::runtime_error("color " + std::to_string(c) + " outside palette 1.." +
                         std::to_string(k)) {}

ColorPalette::ColorPalette(int colors) : k(colors) {
    if (k < 1) throw std::invalid_argument("palette needs at least one color");
}

ColorSet ColorPalette::all() const {
    ColorSet s;
    for (Color c = 1; c <= k; ++c) s.insert(s.end(), c);
    return s;
}

PartialColoring::PartialColoring(std::size_t edge_count, ColorPalette palette)
    : colors_(edge_count, 0), palette_(palette) {}

std::optional<Color> PartialColoring::at(std::size_t edge) const {
    Color c = colors_.at(edge);
    if (c == 0) return std::nullopt;
    return c;
}

void PartialColoring::assign(std::size_t edge, Color c) {
    if (!palette_.contains(c)) throw OutOfPalette(c, palette_.k);
    colors_.at(edge) = c;
}

bool PartialColoring::is_total() const {
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == 0; });
}

std::size_t PartialColoring::colored_count() const {
    return static_cast<std::size_t>(
        std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != 0; }));
}

std::size_t PartialColoring::distinct_colors() const {
    ColorSet s(colors_.begin(), colors_.end());
    s.erase(0);
    return s.size();
}

Color PartialColoring::max_color() const {
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

std::string_view to_string(ConflictReason r) {
    return r == ConflictReason::Triangle ? "Triangle" : "DistanceTwo";
}

std::optional<ConflictReason> sees_reason(const Graph& g, const EdgeRef& e, const EdgeRef& f) {
    if (!g.find_edge(e.u, e.v)) throw UnknownEdge(e.u, e.v);
    if (!g.find_edge(f.u, f.v)) throw UnknownEdge(f.u, f.v);
    if (e.u == f.u && e.v == f.v) return std::nullopt;

    const std::array<Vertex, 2> a{e.u, e.v};
    const std::array<Vertex, 2> b{f.u, f.v};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (a[i] == b[j])
                return g.adjacent(a[1 - i], b[1 - j]) ? std::optional(ConflictReason::Triangle)
                                                      : std::nullopt;
    for (Vertex x : a)
        for (Vertex y : b)
            if (g.adjacent(x, y)) return ConflictReason::DistanceTwo;
    return std::nullopt;
}

bool sees(const Graph& g, const EdgeRef& e, const EdgeRef& f) {
    return sees_reason(g, e, f).has_value();
}

std::vector<std::size_t> conflict_neighbors(const Graph& g, std::size_t index) {
    // Walk outward from uv rather than testing all pairs: triangle partners
    // are uw, vw for common neighbors w; distance-two partners are edges ab
    // with a a neighbor of u or v and neither a nor b in {u, v}.
    const EdgeRef e = g.edge(index);
    const Vertex u = e.u, v = e.v;
    std::vector<std::size_t> partners;
    for (Vertex w : triangle_apexes(g, e)) {
        partners.push_back(g.find_edge(u, w)->index);
        partners.push_back(g.find_edge(v, w)->index);
    }
    for (Vertex end : {u, v})
        for (Vertex a : g.neighbors(end)) {
            if (a == u || a == v) continue;
            for (Vertex b : g.neighbors(a))
                if (b != u && b != v) partners.push_back(g.find_edge(a, b)->index);
        }
    std::sort(partners.begin(), partners.end());
    partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
    return partners;
}

Graph conflict_graph(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        for (std::size_t j : conflict_neighbors(g, i))
            if (j > i) pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph::from_edge_list(pairs, g.edge_count());
}

ColorSet forbidden_set(const Graph& g, const PartialColoring& phi, const EdgeRef& e) {
    auto self = g.find_edge(e.u, e.v);
    if (!self) throw UnknownEdge(e.u, e.v);
    ColorSet out;
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        if (j == self->index || !phi.is_colored(j)) continue;
        if (sees(g, *self, g.edge(j))) out.insert(*phi.at(j));
    }
    return out;
}

ColorSet available_set(const Graph& g, const PartialColoring& phi, const EdgeRef& e) {
    ColorSet out = phi.palette().all();
    for (Color c : forbidden_set(g, phi, e)) out.erase(c);
    return out;
}

ColorSet incident_colors(const Graph& g, const PartialColoring& phi, Vertex x) {
    ColorSet out;
    for (std::size_t i : g.incident_edges(x))
        if (phi.is_colored(i)) out.insert(*phi.at(i));
    return out;
}

ConflictReport verify(const Graph& g, const PartialColoring& phi) {
    return verify(g, conflict_graph(g), phi);
}

ConflictReport verify(const Graph& g, const Graph& conflicts, const PartialColoring& phi) {
    if (phi.size() != g.edge_count())
        throw std::invalid_argument("coloring does not match graph edge count");
    for (Color c : phi.raw())
        if (c != 0 && !phi.palette().contains(c)) throw OutOfPalette(c, phi.palette().k);

    ConflictReport report;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (!phi.is_colored(i)) continue;
        for (Vertex j : conflicts.neighbors(static_cast<Vertex>(i))) {
            auto jj = static_cast<std::size_t>(j);
            if (jj <= i || phi.raw()[jj] != phi.raw()[i]) continue;
            const EdgeRef e = g.edge(i);
            const EdgeRef f = g.edge(jj);
            report.violations.push_back({e, f, *sees_reason(g, e, f)});
        }
    }
    report.valid = report.violations.empty();
    report.colors_used = phi.distinct_colors();
    return report;
}

}  // namespace injcolor
