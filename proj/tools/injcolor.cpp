// injcolor: injective edge-coloring toolkit.
//
// Exit codes: 0 success / valid, 1 usage or I/O error, 2 invalid coloring
// (or failed audit), 3 input outside the claw-free Δ <= 4 class, 4 search
// budget exhausted.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "injcolor/audit.hpp"
#include "injcolor/conflict.hpp"
#include "injcolor/exact.hpp"
#include "injcolor/generators.hpp"
#include "injcolor/io.hpp"
#include "injcolor/reducer.hpp"

using namespace injcolor;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kPrecondition = 3, kBudget = 4 };

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_file(out_path, text);
}

std::string describe(const PreconditionFailed& e) {
    std::ostringstream ss;
    ss << "precondition failed: " << e.what();
    if (e.claw)
        ss << "\nclaw witness: center " << e.claw->center << ", leaves " << e.claw->leaves[0] << ' '
           << e.claw->leaves[1] << ' ' << e.claw->leaves[2];
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Injective edge-coloring: verify, color claw-free graphs with Δ <= 4, exact index"};
    app.require_subcommand(1);

    std::string format = "edgelist";
    app.add_option("--format", format, "Graph input format: edgelist, dimacs or auto")
        ->check(CLI::IsMember({"edgelist", "dimacs", "auto"}));

    std::string graph_path, coloring_path, out_path;

    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against a graph");
    verify_cmd->add_option("graph", graph_path)->required();
    verify_cmd->add_option("coloring", coloring_path)->required();

    int k = kDefaultColors;
    bool force_greedy = false;
    auto* color_cmd = app.add_subcommand("color", "Injective k-edge-coloring of a claw-free graph with Δ <= 4");
    color_cmd->add_option("graph", graph_path)->required();
    color_cmd->add_option("--k", k, "Palette size")->check(CLI::PositiveNumber);
    color_cmd->add_flag("--force-greedy", force_greedy,
                        "Fall back to first-fit for inputs outside the class (no bound on colors)");
    color_cmd->add_option("-o,--output", out_path, "Output coloring file (default stdout)");

    std::uint64_t budget = kDefaultBudget;
    bool brute = false;
    auto* chi_cmd = app.add_subcommand("chi", "Exact injective chromatic index");
    chi_cmd->add_option("graph", graph_path)->required();
    chi_cmd->add_option("--budget", budget, "Branch-and-bound node limit");
    chi_cmd->add_flag("--brute", brute, "Use the exhaustive oracle (at most 12 edges)");
    chi_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* conflicts_cmd = app.add_subcommand("conflicts", "Write the conflict graph as an edge list");
    conflicts_cmd->add_option("graph", graph_path)->required();
    conflicts_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

    std::string family = "line-subcubic", name;
    std::size_t n = 10;
    std::uint64_t seed = 1;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
    gen_cmd->add_option("--family", family, "line-subcubic, clawfree-max4 or named")->required();
    gen_cmd->add_option("-n", n, "Size parameter");
    gen_cmd->add_option("--seed", seed, "Random seed");
    gen_cmd->add_option("--name", name, "Graph name for --family named");
    gen_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* audit_cmd = app.add_subcommand("audit", "Run the acceptance checks and print a pass/fail table");
    audit_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const GraphFormat fmt = parse_graph_format(format);

        if (*verify_cmd) {
            const Graph g = load_graph(graph_path, fmt);
            const PartialColoring phi = load_coloring(g, coloring_path);
            const ConflictReport report = verify(g, phi);
            std::cout << report_to_json(report);
            return report.valid ? kOk : kInvalid;
        }

        if (*color_cmd) {
            const Graph g = load_graph(graph_path, fmt);
            PartialColoring phi;
            try {
                phi = color_claw_free(g, k);
            } catch (const PreconditionFailed& e) {
                if (!force_greedy) {
                    std::cerr << describe(e) << '\n';
                    return kPrecondition;
                }
                std::cerr << "warning: " << e.what()
                          << "; using first-fit greedy coloring, no bound on the number of colors\n";
                phi = color_greedy(g, k);
            }
            emit(out_path, coloring_to_json(g, phi));
            return kOk;
        }

        if (*chi_cmd) {
            const Graph g = load_graph(graph_path, fmt);
            if (brute) {
                nlohmann::ordered_json doc;
                doc["chi"] = brute_force_index(g);
                doc["method"] = "brute-force";
                emit(out_path, doc.dump(2) + "\n");
                return kOk;
            }
            const SolveResult result = injective_chromatic_index(g, budget);
            emit(out_path, solve_result_to_json(g, result));
            return result.budget_exhausted ? kBudget : kOk;
        }

        if (*conflicts_cmd) {
            const Graph g = load_graph(graph_path, fmt);
            std::ostringstream ss;
            write_edge_list(ss, conflict_graph(g));
            emit(out_path, ss.str());
            return kOk;
        }

        if (*gen_cmd) {
            GenSpec spec{parse_family(family), n, seed, name};
            const Graph g = generate(spec);
            std::ostringstream ss;
            write_edge_list(ss, g, manifest_line(spec));
            emit(out_path, ss.str());
            return kOk;
        }

        if (*audit_cmd) {
            const AuditReport report = run_audit();
            emit(out_path, report.render());
            return report.all_pass() ? kOk : kInvalid;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
