#include "ctxw/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "ctxw/error.hpp"

namespace ctxw {

namespace {

long long parse_count(std::istringstream& ss, std::size_t line_no, const char* what) {
    long long x = 0;
    if (!(ss >> x)) throw InputError(fmt::format("DIMACS line {}: expected {}", line_no, what));
    return x;
}

}  // namespace

Graph read_dimacs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw InputError(fmt::format("DIMACS line {}: second problem line", line_no));
            std::string kind;
            ss >> kind;
            if (kind != "edge" && kind != "col")
                throw InputError(fmt::format("DIMACS line {}: unsupported problem kind '{}'", line_no, kind));
            n = parse_count(ss, line_no, "vertex count");
            parse_count(ss, line_no, "edge count");
            if (n <= 0) throw InputError(fmt::format("DIMACS line {}: vertex count must be positive", line_no));
        } else if (tag == "e") {
            if (n < 0) throw InputError(fmt::format("DIMACS line {}: edge before problem line", line_no));
            auto u = parse_count(ss, line_no, "edge endpoint");
            auto v = parse_count(ss, line_no, "edge endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError(fmt::format("DIMACS line {}: endpoint outside 1..{}", line_no, n));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw InputError(fmt::format("DIMACS line {}: unknown line type '{}'", line_no, tag));
        }
    }
    if (n < 0) throw InputError("DIMACS input has no problem line");
    return Graph(static_cast<std::size_t>(n), edges);
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
        auto n = j.at("n").get<long long>();
        if (n <= 0) throw InputError("graph JSON: n must be positive");
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("graph JSON: each edge must be a pair");
            auto u = e[0].get<long long>();
            auto v = e[1].get<long long>();
            if (u < 0 || v < 0 || u >= n || v >= n) throw InputError(fmt::format("graph JSON: endpoint outside 0..{}", n - 1));
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        return Graph(static_cast<std::size_t>(n), edges);
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(fmt::format("graph JSON: {}", ex.what()));
    }
}

void write_graph_json(std::ostream& out, const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::json j;
    j["n"] = g.order();
    j["edges"] = std::move(edges);
    out << j.dump() << '\n';
}

GraphFormat format_for_path(const std::filesystem::path& path) {
    return path.extension() == ".json" ? GraphFormat::Json : GraphFormat::Dimacs;
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(fmt::format("cannot open '{}'", path.string()));
    return format_for_path(path) == GraphFormat::Json ? read_graph_json(in) : read_dimacs(in);
}

void save_graph(const std::filesystem::path& path, const Graph& g) { save_graph(path, g, format_for_path(path)); }

void save_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw InputError(fmt::format("cannot write '{}'", path.string()));
    if (format == GraphFormat::Json)
        write_graph_json(out, g);
    else
        write_dimacs(out, g);
}

}  // namespace ctxw
