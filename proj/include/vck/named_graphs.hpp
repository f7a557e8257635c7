#pragma once

#include <string>
#include <string_view>

#include "vck/graph.hpp"

namespace vck {

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // sides {0..a-1}, {a..a+b-1}
Graph cycle_graph(int n);                // 0-1-...-(n-1)-0
Graph path_graph(int n);                 // 0-1-...-(n-1)
Graph star_graph(int leaves);            // centre 0
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

// Short names used on the command line:
//   K<n>      complete graph, n a single digit
//   Kn<n>     complete graph, any n
//   K<a><b>   complete bipartite graph with single-digit sides, e.g. K33
//   K<a>_<b>  complete bipartite graph, e.g. K2_7
//   C<n>, P<n>, S<n> (star with n leaves), E<n> (edgeless), petersen
Graph named_graph(std::string_view name);

}  // namespace vck
