#include "injcolor/exact.hpp"

#include <algorithm>

namespace injcolor {

namespace {

int greedy_clique_bound(const Graph& h) {
    int best = h.vertex_count() > 0 ? 1 : 0;
    for (std::size_t seed = 0; seed < h.vertex_count(); ++seed) {
        std::vector<Vertex> clique{static_cast<Vertex>(seed)};
        // Candidates by descending degree, then id.
        std::vector<Vertex> cand = h.neighbors(static_cast<Vertex>(seed));
        std::stable_sort(cand.begin(), cand.end(),
                         [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
        for (Vertex c : cand)
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex m) { return h.adjacent(c, m); }))
                clique.push_back(c);
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

std::vector<Color> first_fit(const Graph& h) {
    std::vector<Color> colors(h.vertex_count(), 0);
    for (std::size_t x = 0; x < h.vertex_count(); ++x) {
        std::vector<bool> used(h.degree(static_cast<Vertex>(x)) + 2, false);
        for (Vertex y : h.neighbors(static_cast<Vertex>(x))) {
            const Color c = colors[y];
            if (c > 0 && static_cast<std::size_t>(c) < used.size()) used[c] = true;
        }
        Color c = 1;
        while (used[c]) ++c;
        colors[x] = c;
    }
    return colors;
}

class Dsatur {
public:
    Dsatur(const Graph& h, std::uint64_t budget, int upper)
        : h_(h), n_(h.vertex_count()), budget_(budget), width_(upper + 1) {
        color_.assign(n_, 0);
        seen_.assign(n_ * width_, 0);
        saturation_.assign(n_, 0);
    }

    // Searches for colorings with fewer than `best` colors; returns the best found.
    int run(int best, std::vector<Color>& best_colors, int lower) {
        best_ = best;
        best_colors_ = &best_colors;
        lower_ = lower;
        search(0, 0);
        return best_;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

private:
    std::uint8_t& seen(std::size_t x, Color c) { return seen_[x * width_ + c]; }

    Vertex pick() const {
        Vertex best = -1;
        for (std::size_t x = 0; x < n_; ++x) {
            if (color_[x] != 0) continue;
            if (best < 0 || saturation_[x] > saturation_[best] ||
                (saturation_[x] == saturation_[best] && h_.degree(static_cast<Vertex>(x)) > h_.degree(best)))
                best = static_cast<Vertex>(x);
        }
        return best;
    }

    void paint(Vertex x, Color c, int delta) {
        for (Vertex y : h_.neighbors(x)) {
            auto& s = seen(y, c);
            if (delta > 0) {
                if (s++ == 0) ++saturation_[y];
            } else {
                if (--s == 0) --saturation_[y];
            }
        }
    }

    // Returns true when the search should stop (optimum proven or budget out).
    bool search(std::size_t colored, int used) {
        if (colored == n_) {
            best_ = used;
            std::copy(color_.begin(), color_.end(), best_colors_->begin());
            return best_ <= lower_;
        }
        const Vertex x = pick();
        // best_ shrinks as better colorings turn up.
        for (Color c = 1; c <= std::min(used + 1, best_ - 1); ++c) {
            if (seen(x, c) != 0) continue;
            if (nodes_ >= budget_) {
                exhausted_ = true;
                return true;
            }
            ++nodes_;
            color_[x] = c;
            paint(x, c, +1);
            const bool stop = search(colored + 1, std::max(used, c));
            paint(x, c, -1);
            color_[x] = 0;
            if (stop) return true;
        }
        return false;
    }

    const Graph& h_;
    std::size_t n_;
    std::uint64_t budget_;
    std::size_t width_;
    std::vector<Color> color_;
    std::vector<std::uint8_t> seen_;
    std::vector<int> saturation_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    int best_ = 0;
    int lower_ = 0;
    std::vector<Color>* best_colors_ = nullptr;
};

}  // namespace

VertexColoringResult chromatic_number_bb(const Graph& h, std::uint64_t budget) {
    VertexColoringResult r;
    if (h.vertex_count() == 0) return r;

    r.lower_bound = greedy_clique_bound(h);
    r.colors = first_fit(h);
    r.chi = *std::max_element(r.colors.begin(), r.colors.end());
    if (r.chi == r.lower_bound) return r;

    Dsatur search(h, budget, r.chi);
    r.chi = search.run(r.chi, r.colors, r.lower_bound);
    r.nodes_explored = search.nodes();
    r.budget_exhausted = search.exhausted();
    return r;
}

SolveResult injective_chromatic_index(const Graph& g, std::uint64_t budget) {
    const auto vc = chromatic_number_bb(conflict_graph(g), budget);
    SolveResult r{vc.chi, PartialColoring(g.edge_count(), ColorPalette(std::max(vc.chi, 1))),
                  vc.lower_bound, vc.nodes_explored, vc.budget_exhausted};
    for (std::size_t i = 0; i < vc.colors.size(); ++i) r.witness.assign(i, vc.colors[i]);
    return r;
}

int brute_force_index(const Graph& g) {
    const std::size_t m = g.edge_count();
    if (m > kBruteForceMaxEdges)
        throw TooLarge("brute force is limited to " + std::to_string(kBruteForceMaxEdges) +
                       " edges, graph has " + std::to_string(m));
    if (m == 0) return 0;

    // earlier[i] = edges j < i that see edge i
    std::vector<std::vector<std::size_t>> earlier(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (sees(g, g.edge(i), g.edge(j))) earlier[i].push_back(j);

    std::vector<Color> color(m, 0);
    for (int k = 1;; ++k) {
        // Edge i may only open color max_used + 1, which removes color permutations.
        auto fill = [&](auto&& self, std::size_t i, int max_used) -> bool {
            if (i == m) return true;
            for (Color c = 1; c <= std::min(k, max_used + 1); ++c) {
                bool clash = false;
                for (std::size_t j : earlier[i])
                    if (color[j] == c) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                color[i] = c;
                if (self(self, i + 1, std::max(max_used, c))) return true;
            }
            color[i] = 0;
            return false;
        };
        if (fill(fill, 0, 0)) return k;
    }
}

}  // namespace injcolor
