#pragma once

#include <optional>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

// Exact finders shared by the property registry and the solvers. All of them
// work on graphs with at most 64 vertices; the subset DPs additionally refuse
// graphs above kSubsetDpLimit vertices with CeilingExceeded.
constexpr int kSubsetDpLimit = 24;

// Cycles are returned in cyclic order, paths in path order.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g);
std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g);
// An induced cycle on at least min_length vertices.
std::optional<std::vector<Vertex>> chordless_cycle(const Graph& g, int min_length);
bool is_bipartite(const Graph& g);
bool is_chordal(const Graph& g);

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g);
// s or t may be -1 for a free endpoint.
std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g, Vertex s = -1, Vertex t = -1);
// Empty when the graph has no cycle (resp. no vertices).
std::vector<Vertex> longest_cycle(const Graph& g);
std::vector<Vertex> longest_path(const Graph& g);

// Vertex sets of h-copies as (not necessarily induced) subgraphs.
std::optional<VertexSet> subgraph_copy(const Graph& g, const Graph& h);
// A maximum collection of vertex-disjoint copies of h.
std::vector<VertexSet> max_packing(const Graph& g, const Graph& h);
// Witnessing copy for every vertex, or nothing.
std::optional<std::vector<VertexSet>> perfect_packing(const Graph& g, const Graph& h);

// Embedding of h as a subgraph: image[x] is the host vertex of query vertex x.
std::optional<std::vector<Vertex>> subgraph_embedding(const Graph& g, const Graph& h);

}  // namespace vck
