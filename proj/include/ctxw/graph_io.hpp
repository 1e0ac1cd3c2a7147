#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ctxw/graph.hpp"

namespace ctxw {

/// DIMACS ascii: `c` comments, one `p edge <n> <m>` line, `e <u> <v>` lines
/// with 1-based endpoints. Duplicate and reversed edges are accepted; the
/// declared m is not enforced.
Graph read_dimacs(std::istream& in);
/// One `e` line per edge with u < v, sorted; preceded by the `p` line.
void write_dimacs(std::ostream& out, const Graph& g);

/// {"n": int, "edges": [[u, v], ...]} with 0-based endpoints.
Graph read_graph_json(std::istream& in);
void write_graph_json(std::ostream& out, const Graph& g);

enum class GraphFormat { Dimacs, Json };

/// `.json` selects the structured-text format; anything else is DIMACS.
GraphFormat format_for_path(const std::filesystem::path& path);

Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g);
void save_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format);

}  // namespace ctxw
