#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "injcolor/conflict.hpp"
#include "injcolor/exact.hpp"
#include "injcolor/graph.hpp"

namespace injcolor {

/// Parse or I/O failure; what() names the source and line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& message);
    std::string source;
    std::size_t line;
};

enum class GraphFormat { EdgeList, Dimacs, Auto };

/// Edge list: "u v" per line, 0-based; '#' comments and blank lines skipped.
/// DIMACS: optional "p edge n m", then "e u v" with 1-based ids; 'c' comments.
/// Auto picks DIMACS when the first meaningful line starts with 'p', 'e' or 'c'.
Graph read_graph(std::istream& in, GraphFormat format = GraphFormat::Auto,
                 const std::string& source = "<input>");
Graph load_graph(const std::string& path, GraphFormat format = GraphFormat::Auto);
GraphFormat parse_graph_format(const std::string& s);

/// One "u v" line per edge in canonical order, after an optional header line.
void write_edge_list(std::ostream& out, const Graph& g, const std::string& header = "");

/// {"k": K, "edges": [{"u": U, "v": V, "c": C}, ...]} with records sorted by
/// (u, v) and uncolored edges omitted. Writing is canonical, so reading and
/// re-writing reproduces the bytes.
std::string coloring_to_json(const Graph& g, const PartialColoring& phi);
PartialColoring coloring_from_json(const Graph& g, const std::string& text,
                                   const std::string& source = "<coloring>");
PartialColoring load_coloring(const Graph& g, const std::string& path);

std::string report_to_json(const ConflictReport& report);
std::string solve_result_to_json(const Graph& g, const SolveResult& result);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace injcolor
