#include "injcolor/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace injcolor {

using ordered_json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& source_, std::size_t line_, const std::string& message)
    : std::runtime_error(source_ + (line_ ? ":" + std::to_string(line_) : std::string()) + ": " +
                         message),
      source(source_),
      line(line_) {}

GraphFormat parse_graph_format(const std::string& s) {
    if (s == "edgelist") return GraphFormat::EdgeList;
    if (s == "dimacs") return GraphFormat::Dimacs;
    if (s == "auto") return GraphFormat::Auto;
    throw std::invalid_argument("unknown graph format '" + s + "'");
}

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

char first_char(const std::string& line) {
    auto p = line.find_first_not_of(" \t\r");
    return p == std::string::npos ? '\0' : line[p];
}

long long parse_int(std::istringstream& ss, const std::string& source, std::size_t line) {
    long long x;
    if (!(ss >> x)) throw ParseError(source, line, "expected an integer");
    return x;
}

void expect_end(std::istringstream& ss, const std::string& source, std::size_t line) {
    std::string extra;
    if (ss >> extra) throw ParseError(source, line, "unexpected token '" + extra + "'");
}

}  // namespace

Graph read_graph(std::istream& in, GraphFormat format, const std::string& source) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);

    if (format == GraphFormat::Auto) {
        format = GraphFormat::EdgeList;
        for (const auto& line : lines) {
            const char c = first_char(line);
            if (c == '\0' || c == '#') continue;
            if (c == 'p' || c == 'e' || c == 'c') format = GraphFormat::Dimacs;
            break;
        }
    }

    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::vector<std::size_t> line_of;
    std::size_t declared_n = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t ln = i + 1;
        const std::string& line = lines[i];
        if (blank(line)) continue;
        std::istringstream ss(line);
        if (format == GraphFormat::EdgeList) {
            if (first_char(line) == '#') continue;
            const long long a = parse_int(ss, source, ln);
            const long long b = parse_int(ss, source, ln);
            expect_end(ss, source, ln);
            if (a < 0 || b < 0) throw ParseError(source, ln, "negative vertex id");
            pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        } else {
            std::string tag;
            ss >> tag;
            if (tag == "c" || tag[0] == '#') continue;
            if (tag == "p") {
                std::string kind;
                ss >> kind;
                declared_n = static_cast<std::size_t>(parse_int(ss, source, ln));
                parse_int(ss, source, ln);
                expect_end(ss, source, ln);
            } else if (tag == "e") {
                const long long a = parse_int(ss, source, ln);
                const long long b = parse_int(ss, source, ln);
                expect_end(ss, source, ln);
                if (a < 1 || b < 1) throw ParseError(source, ln, "DIMACS ids are 1-based");
                pairs.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
            } else {
                throw ParseError(source, ln, "unknown DIMACS line '" + tag + "'");
            }
        }
        line_of.push_back(ln);
    }

    try {
        return Graph::from_edge_list(pairs, declared_n);
    } catch (const GraphError& e) {
        // Name the first offending line.
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (pairs[i].first == pairs[i].second) throw ParseError(source, line_of[i], e.what());
            for (std::size_t j = 0; j < i; ++j) {
                const bool same = (pairs[i] == pairs[j]) ||
                                  (pairs[i].first == pairs[j].second && pairs[i].second == pairs[j].first);
                if (same) throw ParseError(source, line_of[i], e.what());
            }
        }
        throw ParseError(source, 0, e.what());
    }
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return read_graph(in, format, path);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& header) {
    if (!header.empty()) out << header << '\n';
    for (auto [a, b] : g.edge_list()) out << a << ' ' << b << '\n';
}

std::string coloring_to_json(const Graph& g, const PartialColoring& phi) {
    ordered_json doc;
    doc["k"] = phi.palette().k;
    doc["edges"] = ordered_json::array();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto c = phi.at(i);
        if (!c) continue;
        auto [a, b] = g.edge_list()[i];
        doc["edges"].push_back(ordered_json{{"u", a}, {"v", b}, {"c", *c}});
    }
    return doc.dump(2) + "\n";
}

PartialColoring coloring_from_json(const Graph& g, const std::string& text, const std::string& source) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source, 0, e.what());
    }
    try {
        PartialColoring phi(g.edge_count(), ColorPalette(doc.at("k").get<int>()));
        for (const auto& rec : doc.at("edges")) {
            const Vertex a = rec.at("u").get<Vertex>();
            const Vertex b = rec.at("v").get<Vertex>();
            auto e = g.find_edge(a, b);
            if (!e) throw UnknownEdge(a, b);
            if (phi.is_colored(e->index)) throw DuplicateEdge(a, b);
            phi.assign(e->index, rec.at("c").get<Color>());
        }
        return phi;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source, 0, e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, 0, e.what());
    }
}

PartialColoring load_coloring(const Graph& g, const std::string& path) {
    return coloring_from_json(g, read_file(path), path);
}

std::string report_to_json(const ConflictReport& report) {
    ordered_json doc;
    doc["valid"] = report.valid;
    doc["colors_used"] = report.colors_used;
    doc["violations"] = ordered_json::array();
    for (const auto& v : report.violations)
        doc["violations"].push_back(ordered_json{{"e", {v.first.u, v.first.v}},
                                                 {"f", {v.second.u, v.second.v}},
                                                 {"reason", std::string(to_string(v.reason))}});
    return doc.dump(2) + "\n";
}

std::string solve_result_to_json(const Graph& g, const SolveResult& result) {
    ordered_json doc;
    doc["chi"] = result.chi;
    doc["lower_bound"] = result.lower_bound;
    doc["budget_exhausted"] = result.budget_exhausted;
    doc["nodes_explored"] = result.nodes_explored;
    doc["witness"] = ordered_json::parse(coloring_to_json(g, result.witness));
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path, 0, "cannot write file");
    out << contents;
    if (!out) throw ParseError(path, 0, "write failed");
}

}  // namespace injcolor
