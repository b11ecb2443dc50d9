#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "injcolor/graph.hpp"

namespace injcolor {

/// Seeded source used by every generator. Draws come straight from
/// std::mt19937_64 (whose output sequence is fixed by the standard); bounded
/// integers use rejection sampling and shuffles are Fisher-Yates from the back,
/// so a seed yields the same graph on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

class UnknownName : public std::invalid_argument {
public:
    explicit UnknownName(const std::string& name);
};

/// Graph on the edges of h (canonical indices), adjacent iff they share an endpoint.
Graph line_graph(const Graph& h);

/// Maximal subcubic graph from one shuffled order of all vertex pairs, taken
/// in two passes under the degree cap of 3: the first pass skips pairs that
/// would close a cycle shorter than 5, the second admits the rest. Cubic
/// outputs are therefore often of girth 5, whose line graphs are the
/// 4-regular, 4-cycle-free instances.
Graph random_subcubic(std::size_t n, std::uint64_t seed);

/// Line graph of a random host built like random_subcubic but under the
/// tighter cap d(a) + d(b) <= 5 for every host edge ab, so the result is
/// claw-free with Δ <= 3. Only the largest component is kept (ties go to the
/// component holding the smallest host edge).
Graph random_claw_free_subcubic(std::size_t n, std::uint64_t seed);

/// Every vertex pair in shuffled order, kept unless it would give an endpoint
/// degree 5 or create an induced K_{1,3}.
Graph random_claw_free_max4(std::size_t n, std::uint64_t seed);

/// k4, k5, c6bar, cycle, path, octahedron, line-petersen, line-k33.
/// `n` sizes cycle and path and is ignored otherwise.
Graph named_graph(const std::string& name, std::size_t n = 5);

const std::vector<std::string>& named_graph_names();

enum class Family { LineSubcubic, ClawFreeMax4, Named };

struct GenSpec {
    Family family = Family::LineSubcubic;
    std::size_t n = 10;
    std::uint64_t seed = 1;
    std::string name;   // Named only
};

std::string to_string(Family f);
/// "line-subcubic", "clawfree-max4", "named". Throws UnknownName.
Family parse_family(const std::string& s);

/// Generates and checks the family contract (claw-free, degree caps).
Graph generate(const GenSpec& spec);

/// "# family=<f> n=<n> seed=<s>"
std::string manifest_line(const GenSpec& spec);

}  // namespace injcolor
