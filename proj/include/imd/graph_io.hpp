#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "imd/graph.hpp"

namespace imd {

enum class GraphFormat { Graph6, EdgeList };

/// Parses a single graph. Surrounding whitespace and a trailing newline are
/// ignored. Throws ParseError carrying the byte offset of the first problem.
Graph parse_graph(std::string_view text, GraphFormat format);
Graph parse_graph6(std::string_view text);
Graph parse_edgelist(std::string_view text);

/// One graph6 graph per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// graph6 encoding without header or newline.
std::string to_graph6(const Graph& g);
/// "n\nu v\n..." with u < v, edges sorted.
std::string to_edgelist(const Graph& g);
std::string encode_graph(const Graph& g, GraphFormat format);

/// Case-insensitive "graph6"/"g6" or "edgelist"/"el".
GraphFormat parse_format_name(std::string_view name);
/// Guesses the format from a file name (".g6" -> graph6, otherwise edgelist).
GraphFormat format_for_path(std::string_view path);

}  // namespace imd
