#pragma once

#include <string>
#include <string_view>

#include "vck/graph.hpp"

namespace vck {

enum class GraphFormat { edge_list, dimacs };

// edge_list: header "n m" then m lines "u v" (0-based).
// dimacs:    "c ..." comments, header "p edge n m", lines "e u v" (1-based).
// Blank lines are ignored in both. Duplicate edges collapse; the edge count in
// the header must equal the number of edge lines.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

GraphFormat format_from_name(std::string_view name);
// Guesses from the file extension: ".dimacs"/".col" select dimacs.
GraphFormat format_from_path(std::string_view path);

}  // namespace vck
