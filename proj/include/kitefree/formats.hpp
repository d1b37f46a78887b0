#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "kitefree/graph.hpp"

namespace kitefree {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GraphFormat { graph6, dimacs, edge_list };

// graph6 per the standard 6-bit encoding (upper triangle, column-major).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// DIMACS coloring format: "p edge n m" header, "e u v" lines, 1-indexed.
std::string to_dimacs(const Graph& g);
Graph from_dimacs(const std::string& text);

// Plain text: first line n, then "u v" lines, 0-indexed.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

std::optional<GraphFormat> format_from_extension(const std::string& path);

Graph parse_graph(const std::string& text, GraphFormat fmt);

} // namespace kitefree
