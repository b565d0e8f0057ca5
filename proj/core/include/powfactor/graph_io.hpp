#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "powfactor/graph.hpp"

namespace powfactor {

enum class GraphFormat { EdgeList, Graph6 };

// Edge list: first non-comment line holds n, then one "u v" pair per line.
// '#' starts a comment. Duplicate edges are merged.
SimpleGraph parse_edge_list(std::string_view text);
std::string emit_edge_list(const SimpleGraph& g);

// One graph6 record (trailing newline optional). Supports n < 258048.
SimpleGraph parse_graph6(std::string_view line);
std::string emit_graph6(const SimpleGraph& g);

// Every non-empty line parsed as graph6; errors name the line.
std::vector<SimpleGraph> parse_graph6_stream(std::string_view text);

SimpleGraph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const SimpleGraph& g, GraphFormat format);

// Picks graph6 when the first meaningful line looks like one, else edge list.
GraphFormat sniff_format(std::string_view text);

}  // namespace powfactor
