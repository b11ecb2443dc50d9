#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "injcolor/graph.hpp"

namespace injcolor {

using Color = int;
using ColorSet = std::set<Color>;

inline constexpr int kDefaultColors = 13;

class OutOfPalette : public std::runtime_error {
public:
    OutOfPalette(Color c, int k);
};

/// Colors 1..k.
struct ColorPalette {
    int k = kDefaultColors;

    explicit ColorPalette(int colors = kDefaultColors);
    bool contains(Color c) const { return c >= 1 && c <= k; }
    ColorSet all() const;

    friend bool operator==(const ColorPalette&, const ColorPalette&) = default;
};

/// Edge index -> optional color. Color 0 in the backing store means
/// "uncolored"; assigned colors always lie in the palette.
class PartialColoring {
public:
    PartialColoring() : PartialColoring(0, ColorPalette{}) {}
    PartialColoring(std::size_t edge_count, ColorPalette palette);

    std::size_t size() const { return colors_.size(); }
    const ColorPalette& palette() const { return palette_; }

    std::optional<Color> at(std::size_t edge) const;
    bool is_colored(std::size_t edge) const { return colors_.at(edge) != 0; }
    /// Throws OutOfPalette.
    void assign(std::size_t edge, Color c);
    void clear(std::size_t edge) { colors_.at(edge) = 0; }

    bool is_total() const;
    std::size_t colored_count() const;
    std::size_t distinct_colors() const;
    Color max_color() const;
    /// Raw view, 0 for uncolored.
    const std::vector<Color>& raw() const { return colors_; }

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    std::vector<Color> colors_;
    ColorPalette palette_;
};

enum class ConflictReason { Triangle, DistanceTwo };

std::string_view to_string(ConflictReason r);

/// Why e and f see each other, or nothing if they do not.
/// Edges sharing an endpoint conflict only when they span a triangle;
/// disjoint edges conflict when some edge joins an endpoint of one to an
/// endpoint of the other.
std::optional<ConflictReason> sees_reason(const Graph& g, const EdgeRef& e, const EdgeRef& f);
bool sees(const Graph& g, const EdgeRef& e, const EdgeRef& f);

/// Indices of the edges that see edge `index`, ascending.
std::vector<std::size_t> conflict_neighbors(const Graph& g, std::size_t index);

/// Graph on edge indices of g, adjacent iff the edges see each other.
Graph conflict_graph(const Graph& g);

ColorSet forbidden_set(const Graph& g, const PartialColoring& phi, const EdgeRef& e);
ColorSet available_set(const Graph& g, const PartialColoring& phi, const EdgeRef& e);
ColorSet incident_colors(const Graph& g, const PartialColoring& phi, Vertex x);

struct Violation {
    EdgeRef first;
    EdgeRef second;
    ConflictReason reason;
};

struct ConflictReport {
    bool valid = true;
    std::vector<Violation> violations;   // sorted by (first.index, second.index)
    std::size_t colors_used = 0;
};

/// Checks every pair of colored edges that see each other.
/// Throws OutOfPalette if a color is outside 1..k.
ConflictReport verify(const Graph& g, const PartialColoring& phi);
/// Same, reusing a conflict graph previously built for g.
ConflictReport verify(const Graph& g, const Graph& conflicts, const PartialColoring& phi);

}  // namespace injcolor
