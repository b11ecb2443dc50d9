#include "injcolor/audit.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "injcolor/conflict.hpp"
#include "injcolor/exact.hpp"
#include "injcolor/reducer.hpp"

namespace injcolor {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string yes_no(bool b) { return b ? "ok" : "FAILED"; }

// Random simple graph on n vertices with at most max_edges edges and
// degrees capped at max_degree.
Graph random_graph(SeededRng& rng, std::size_t n, std::size_t max_edges, std::size_t max_degree) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    rng.shuffle(pairs);
    const std::size_t target = rng.below(max_edges + 1);
    std::vector<std::size_t> degree(n, 0);
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (auto [a, b] : pairs) {
        if (kept.size() >= target) break;
        if (degree[a] >= max_degree || degree[b] >= max_degree) continue;
        ++degree[a];
        ++degree[b];
        kept.emplace_back(a, b);
    }
    return Graph::from_edge_list(kept, n);
}

PartialColoring random_coloring(SeededRng& rng, const Graph& g, int k, bool partial) {
    PartialColoring phi(g.edge_count(), ColorPalette(k));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (partial && rng.below(3) == 0) continue;
        phi.assign(i, static_cast<Color>(1 + rng.below(static_cast<std::uint64_t>(k))));
    }
    return phi;
}

bool proper_on(const Graph& conflicts, const PartialColoring& phi) {
    for (auto [a, b] : conflicts.edge_list()) {
        const Color ca = phi.raw()[a], cb = phi.raw()[b];
        if (ca != 0 && ca == cb) return false;
    }
    return true;
}

bool pairwise_valid(const Graph& g, const PartialColoring& phi) {
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        for (std::size_t j = i + 1; j < g.edge_count(); ++j)
            if (phi.raw()[i] != 0 && phi.raw()[i] == phi.raw()[j] && sees(g, g.edge(i), g.edge(j)))
                return false;
    return true;
}

// Edges seen by vu through u: they avoid u and touch N(u) \ {v}.
std::size_t seen_at(const Graph& g, Vertex v, Vertex u) {
    const EdgeRef vu = g.edge_between(v, u);
    std::size_t count = 0;
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const EdgeRef f = g.edge(j);
        if (f.u == u || f.v == u || j == vu.index) continue;
        const bool touches = (f.u != v && g.adjacent(u, f.u)) || (f.v != v && g.adjacent(u, f.v));
        if (touches && sees(g, vu, f)) ++count;
    }
    return count;
}

std::string stage_summary(const ReductionTrace& t) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < kReductionKinds; ++i)
        ss << (i ? " " : "") << to_string(static_cast<ReductionKind>(i)) << '=' << t.stage_counts[i];
    return ss.str();
}

}  // namespace

bool AuditReport::all_pass() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.pass; });
}

std::string AuditReport::render() const {
    std::ostringstream ss;
    for (const auto& c : criteria) {
        ss << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << '\n';
        std::istringstream lines(c.detail);
        for (std::string line; std::getline(lines, line);) ss << "       " << line << '\n';
    }
    std::size_t passed = 0;
    for (const auto& c : criteria) passed += c.pass ? 1 : 0;
    ss << passed << '/' << criteria.size() << " criteria passed\n";
    return ss.str();
}

std::vector<CorpusInstance> acceptance_corpus() {
    std::vector<CorpusInstance> out;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        GenSpec spec;
        spec.seed = seed;
        if (seed <= 200) {
            spec.family = Family::LineSubcubic;
            spec.n = 6 + (seed - 1) % 15;
        } else {
            spec.family = Family::ClawFreeMax4;
            spec.n = 5 + (seed - 201) % 26;
        }
        out.push_back({seed, spec, generate(spec)});
    }
    return out;
}

std::vector<Graph> subcubic_claw_free_corpus(std::size_t count) {
    std::vector<Graph> out;
    for (std::uint64_t seed = 1; out.size() < count; ++seed) {
        Graph g = random_claw_free_subcubic(6 + seed % 10, seed);
        if (g.max_degree() == 3) out.push_back(std::move(g));
    }
    return out;
}

CriterionResult check_exact_values() {
    struct Case {
        std::string name;
        Graph graph;
        int expected;
    };
    const std::vector<Case> cases{
        {"triangle", named_graph("cycle", 3), 3}, {"P4", named_graph("path", 4), 2},
        {"C4", named_graph("cycle", 4), 2},       {"C5", named_graph("cycle", 5), 3},
        {"K4", named_graph("k4"), 6},             {"complement of C6", named_graph("c6bar"), 6},
        {"K5", named_graph("k5"), 10},            {"octahedron", named_graph("octahedron"), 12},
    };
    CriterionResult r{1, "exact small-instance values (brute force and branch-and-bound agree, < 1 s each)", true, ""};
    std::ostringstream ss;
    for (const auto& c : cases) {
        const auto start = Clock::now();
        const int brute = brute_force_index(c.graph);
        const SolveResult bb = injective_chromatic_index(c.graph);
        const bool fast = seconds_since(start) < 1.0;
        const bool ok = brute == bb.chi && !bb.budget_exhausted && bb.chi == c.expected && fast &&
                        verify(c.graph, bb.witness).valid;
        r.pass = r.pass && ok;
        ss << c.name << ": brute=" << brute << " bb=" << bb.chi << " expected=" << c.expected
           << (fast ? "" : " (too slow)") << ' ' << yes_no(ok) << '\n';
    }
    r.detail = ss.str();
    return r;
}

CriterionResult check_bound_on_corpus() {
    CriterionResult r{2, "color_claw_free on 300 seeded instances: valid, max color <= 13, < 60 s", true, ""};
    const auto start = Clock::now();
    std::size_t valid = 0;
    Color top = 0;
    std::ostringstream bad;
    for (const auto& inst : acceptance_corpus()) {
        try {
            const PartialColoring phi = color_claw_free(inst.graph);
            const bool ok = phi.is_total() && verify(inst.graph, phi).valid && phi.max_color() <= 13;
            if (ok) ++valid;
            else bad << "seed " << inst.seed << ": invalid coloring\n";
            top = std::max(top, phi.max_color());
        } catch (const std::exception& e) {
            bad << "seed " << inst.seed << ": " << e.what() << '\n';
        }
    }
    const bool fast = seconds_since(start) < 60.0;
    r.pass = valid == 300 && fast;
    r.detail = "valid colorings: " + std::to_string(valid) + "/300, largest color used: " + std::to_string(top) +
               (fast ? "" : ", time limit exceeded") + "\n" + bad.str();
    return r;
}

CriterionResult check_stage_coverage() {
    CriterionResult r{3, "stage coverage: named witnesses and corpus stage counters", true, ""};
    std::ostringstream ss;
    const std::vector<std::tuple<std::string, Graph, ReductionKind>> witnesses{
        {"P3", named_graph("path", 3), ReductionKind::Deg3},
        {"K5", named_graph("k5"), ReductionKind::K4Shared},
        {"octahedron", named_graph("octahedron"), ReductionKind::ThreeTriangles},
        {"L(K3,3)", named_graph("line-k33"), ReductionKind::FourCycle},
        {"L(Petersen)", named_graph("line-petersen"), ReductionKind::FinalConfig},
    };
    for (const auto& [name, g, want] : witnesses) {
        const ReductionKind got = find_reduction(g).kind;
        r.pass = r.pass && got == want;
        ss << name << " -> " << to_string(got) << " (want " << to_string(want) << ") " << yes_no(got == want) << '\n';
    }

    ReductionTrace total;
    for (const auto& inst : acceptance_corpus()) {
        ReductionTrace t;
        color_claw_free(inst.graph, kDefaultColors, &t);
        for (std::size_t i = 0; i < kReductionKinds; ++i) total.stage_counts[i] += t.stage_counts[i];
        total.escalations += t.escalations;
    }
    const bool covered = total.count(ReductionKind::Deg3) > 0 &&
                         total.count(ReductionKind::K4Shared) + total.count(ReductionKind::K4Distinct) > 0 &&
                         total.count(ReductionKind::ThreeTriangles) > 0 &&
                         total.count(ReductionKind::FourCycle) > 0 && total.count(ReductionKind::FinalConfig) > 0;
    r.pass = r.pass && covered;
    ss << "corpus: " << stage_summary(total) << " escalations=" << total.escalations << ' ' << yes_no(covered)
       << '\n';
    r.detail = ss.str();
    return r;
}

CriterionResult check_invariant_fuzz() {
    CriterionResult r{4, "invariant fuzzing, 1000 iterations, < 30 s", true, ""};
    const auto start = Clock::now();
    SeededRng rng(20240604);
    std::size_t symmetry = 0, equivalence = 0, forbidden = 0, local = 0, line = 0;
    std::size_t failures = 0;
    std::ostringstream bad;
    auto fail = [&](std::size_t it, const std::string& what) {
        if (failures++ < 5) bad << "iteration " << it << ": " << what << '\n';
    };

    for (std::size_t it = 0; it < 1000; ++it) {
        // Arbitrary graphs with at most 12 edges.
        const Graph g = random_graph(rng, 2 + rng.below(7), 12, 12);
        const Graph conflicts = conflict_graph(g);
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            for (std::size_t j = 0; j < g.edge_count(); ++j) {
                if (i == j) continue;
                const bool ij = sees(g, g.edge(i), g.edge(j));
                if (ij != sees(g, g.edge(j), g.edge(i))) fail(it, "sees not symmetric");
                if (ij != conflicts.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
                    fail(it, "conflict graph disagrees with sees");
                ++symmetry;
            }
        const int k = 1 + static_cast<int>(rng.below(4));
        const PartialColoring phi = random_coloring(rng, g, k, false);
        const bool valid = verify(g, phi).valid;
        if (valid != proper_on(conflicts, phi) || valid != pairwise_valid(g, phi))
            fail(it, "verify disagrees with conflict-graph properness");
        ++equivalence;

        // Forbidden-set size on Δ <= 4 graphs.
        const Graph h = random_graph(rng, 4 + rng.below(9), 20, 4);
        const PartialColoring psi = random_coloring(rng, h, 13, true);
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            const EdgeRef e = h.edge(i);
            const std::size_t cap = 3 * (h.degree(e.u) + h.degree(e.v) - 2);
            if (forbidden_set(h, psi, e).size() > cap) fail(it, "|F(e)| above 3(d(u)+d(v)-2)");
            ++forbidden;
        }

        // Local bound: vu sees at most 6 edges at u when u has no other neighbor in N(v).
        const Graph c = random_claw_free_max4(4 + rng.below(12), rng.below(1u << 30));
        for (auto [a, b] : c.edge_list())
            for (auto [v, u] : {std::pair{a, b}, std::pair{b, a}}) {
                const auto& nv = c.neighbors(v);
                const bool isolated_from_nv =
                    std::none_of(nv.begin(), nv.end(), [&](Vertex w) { return w != u && c.adjacent(u, w); });
                if (!isolated_from_nv) continue;
                if (seen_at(c, v, u) > 6) fail(it, "local bound of 6 exceeded");
                ++local;
            }

        // Line graphs: claw-free, degree formula.
        const Graph base = random_graph(rng, 3 + rng.below(8), 14, 5);
        const Graph lg = line_graph(base);
        if (!is_claw_free(lg) || lg.vertex_count() != base.edge_count()) fail(it, "line graph not claw-free");
        for (std::size_t i = 0; i < base.edge_count(); ++i) {
            const EdgeRef e = base.edge(i);
            if (lg.degree(static_cast<Vertex>(i)) != base.degree(e.u) + base.degree(e.v) - 2)
                fail(it, "line graph degree formula");
            ++line;
        }
    }
    const bool fast = seconds_since(start) < 30.0;
    r.pass = failures == 0 && fast;
    r.detail = "sees symmetry/conflict-graph pairs: " + std::to_string(symmetry) +
               "\nverify vs conflict-graph properness: " + std::to_string(equivalence) +
               "\nforbidden-set bound edges: " + std::to_string(forbidden) +
               "\nlocal bound edges: " + std::to_string(local) +
               "\nline-graph vertices: " + std::to_string(line) + "\nfailures: " + std::to_string(failures) +
               (fast ? "" : ", time limit exceeded") + "\n" + bad.str();
    return r;
}

CriterionResult check_oracle_equivalence() {
    CriterionResult r{5, "branch-and-bound equals brute force on >= 100 generated graphs with <= 12 edges", true, ""};
    SeededRng rng(77);
    std::size_t samples = 0, agree = 0;
    std::ostringstream bad;
    auto check = [&](const Graph& g, const std::string& label) {
        if (g.edge_count() > kBruteForceMaxEdges) return;
        ++samples;
        const int brute = brute_force_index(g);
        const SolveResult bb = injective_chromatic_index(g);
        if (brute == bb.chi && !bb.budget_exhausted) ++agree;
        else bad << label << ": brute=" << brute << " bb=" << bb.chi << '\n';
    };
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        check(random_graph(rng, 3 + rng.below(6), 12, 12), "random " + std::to_string(seed));
        check(random_claw_free_max4(4 + seed % 5, seed), "clawfree " + std::to_string(seed));
        check(line_graph(random_subcubic(3 + seed % 4, seed)), "line " + std::to_string(seed));
    }
    r.pass = samples >= 100 && agree == samples;
    r.detail = "agreeing samples: " + std::to_string(agree) + "/" + std::to_string(samples) + "\n" + bad.str();
    return r;
}

CriterionResult check_sandwich() {
    CriterionResult r{6, "exact index <= colors used by color_claw_free <= 13 on corpus instances with <= 25 edges", true, ""};
    std::size_t checked = 0;
    int max_corpus = 0;
    std::ostringstream bad;
    for (const auto& inst : acceptance_corpus()) {
        if (inst.graph.edge_count() > 25) continue;
        ++checked;
        const SolveResult exact = injective_chromatic_index(inst.graph);
        const PartialColoring phi = color_claw_free(inst.graph);
        const auto used = static_cast<int>(phi.distinct_colors());
        const bool ok = !exact.budget_exhausted && exact.lower_bound <= exact.chi && exact.chi <= used && used <= 13;
        if (!ok)
            bad << "seed " << inst.seed << ": exact=" << exact.chi << " used=" << used
                << (exact.budget_exhausted ? " (budget exhausted)" : "") << '\n';
        r.pass = r.pass && ok;
        max_corpus = std::max(max_corpus, exact.chi);
    }
    int max_named = 0;
    std::string argmax;
    for (const auto& name : named_graph_names()) {
        const Graph g = named_graph(name);
        if (g.edge_count() > 25) continue;
        const int chi = injective_chromatic_index(g).chi;
        if (chi > max_named) {
            max_named = chi;
            argmax = name;
        }
    }
    const int max_seen = std::max(max_corpus, max_named);
    r.pass = r.pass && checked > 0 && max_seen >= 10;
    r.detail = "instances checked: " + std::to_string(checked) + "\nlargest exact index in corpus: " +
               std::to_string(max_corpus) + "\nlargest exact index over named graphs: " + std::to_string(max_named) +
               " (" + argmax + ")\nlargest observed: " + std::to_string(max_seen) + " (gap to 13: " +
               std::to_string(13 - max_seen) + ")\n" + bad.str();
    return r;
}

CriterionResult check_subcubic_bound() {
    CriterionResult r{7, "100 connected claw-free subcubic graphs (Δ = 3): exact index <= 6", true, ""};
    std::size_t ok_count = 0;
    int top = 0;
    std::ostringstream bad;
    const auto corpus = subcubic_claw_free_corpus(100);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const SolveResult exact = injective_chromatic_index(corpus[i]);
        const bool ok = !exact.budget_exhausted && exact.chi <= 6;
        if (ok) ++ok_count;
        else bad << "instance " << i << ": exact=" << exact.chi << '\n';
        top = std::max(top, exact.chi);
    }
    r.pass = ok_count == corpus.size();
    r.detail = "within bound: " + std::to_string(ok_count) + "/" + std::to_string(corpus.size()) +
               ", largest exact index: " + std::to_string(top) + "\n" + bad.str();
    return r;
}

AuditReport run_audit() {
    const std::vector<std::function<CriterionResult()>> checks{
        check_exact_values, check_bound_on_corpus,   check_stage_coverage, check_invariant_fuzz,
        check_oracle_equivalence, check_sandwich, check_subcubic_bound,
    };
    AuditReport first, second;
    for (const auto& c : checks) first.criteria.push_back(c());
    for (const auto& c : checks) second.criteria.push_back(c());
    const bool same = first.render() == second.render();
    first.criteria.push_back(
        {8, "determinism: a second run renders byte-identical results", same, same ? "" : "second run differed\n"});
    return first;
}

}  // namespace injcolor
