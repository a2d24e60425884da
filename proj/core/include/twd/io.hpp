#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "twd/graph.hpp"

namespace twd {

/// Decodes one graph6 record. Accepts an optional ">>graph6<<" header, the
/// short (n <= 62) and both long size forms, and a trailing newline.
/// Throws ParseError whose position() is the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6 (no header, no trailing newline).
std::string write_graph6(const Graph& g);

/// Edge-list format: the first significant line holds n, every following
/// line holds "u v". Blank lines and '#' comments are ignored; duplicate
/// edges collapse. Throws ParseError whose position() is the 1-based line.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

/// Graphviz DOT: vertices as integers, undirected edges.
std::string write_dot(const Graph& g);

enum class GraphFormat { kAuto, kGraph6, kEdgeList };

/// kAuto picks edge-list when the first significant line is a lone integer,
/// graph6 otherwise.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

Graph read_graph_file(const std::filesystem::path& path,
                      GraphFormat format = GraphFormat::kAuto);

}  // namespace twd
