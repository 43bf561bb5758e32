#pragma once

#include <string>

#include "dpg/graph.hpp"

namespace dpg {

// graph6: short form for n <= 62, long form (0x7e prefix) for n <= 258047.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Edge-list text: first non-comment line "n m", then m lines "u v",
// 0-indexed. '#' starts a comment.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Reads a graph from either a file path or a literal graph6 string.
// File contents may be graph6 (single line) or edge-list format.
Graph load_graph(const std::string& input);

std::string to_dot(const Graph& g, const VertexSet* highlight = nullptr);

}  // namespace dpg
