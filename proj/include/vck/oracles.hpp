#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vck/graph.hpp"
#include "vck/minor.hpp"
#include "vck/properties.hpp"

namespace vck {

// Exact exponential-time reference solvers. Each one refuses (CeilingExceeded)
// instead of running on a host graph above max_vertices or a query graph above
// max_query_vertices. Bitset solvers never accept more than 64 vertices.
struct OracleLimits {
    int max_vertices = 16;
    int max_query_vertices = 8;
};

void enforce_ceiling(const Graph& g, const OracleLimits& limits, const char* what);

// A set S with |S| <= k such that G - S has no induced subgraph in the property.
std::optional<VertexSet> solve_deletion(const Graph& g, const PropertySpec& p, int k, const OracleLimits& limits = {});
// A set P with |P| >= k and G[P] in the property. k counts vertices.
std::optional<VertexSet> solve_largest_induced(const Graph& g, const PropertySpec& p, int k,
                                               const OracleLimits& limits = {});
// class_of[v] in [0, q) such that no class induces a subgraph in the property.
std::optional<std::vector<int>> solve_partition(const Graph& g, const PropertySpec& p, int q,
                                                const OracleLimits& limits = {});

std::optional<MinorModel> find_minor(const Graph& g, const Graph& h, const OracleLimits& limits = {});
inline bool has_minor(const Graph& g, const Graph& h, const OracleLimits& limits = {}) {
    return find_minor(g, h, limits).has_value();
}

// image[x] is the vertex of g playing query vertex x.
std::optional<std::vector<Vertex>> find_induced_subgraph(const Graph& g, const Graph& h,
                                                         const OracleLimits& limits = {});
inline bool has_induced_subgraph(const Graph& g, const Graph& h, const OracleLimits& limits = {}) {
    return find_induced_subgraph(g, h, limits).has_value();
}

VertexSet max_independent_set(const Graph& g, const OracleLimits& limits = {});
std::vector<Edge> max_induced_matching(const Graph& g, const OracleLimits& limits = {});
std::optional<std::vector<Vertex>> hamiltonian_st_path(const Graph& g, Vertex s, Vertex t,
                                                       const OracleLimits& limits = {});

struct Biclique {
    VertexSet left;
    VertexSet right;
};

// S ⊆ A, T ⊆ B, |S| = |T| = k, S × T ⊆ E. Throws InputError if (A, B) is not a bipartition.
std::optional<Biclique> bipartite_biclique(const Graph& g, const VertexSet& a, const VertexSet& b, int k,
                                           const OracleLimits& limits = {});
// Induced K_{s,t}: independent left (size s) and right (size t), fully joined.
std::optional<Biclique> find_induced_biclique(const Graph& g, int s, int t, const OracleLimits& limits = {});
// N' ⊆ N with |N'| <= k such that every terminal has exactly one neighbour in N'.
std::optional<VertexSet> perfect_code(const Graph& g, const VertexSet& terminals, const VertexSet& n_side, int k,
                                      const OracleLimits& limits = {});
// An induced path on at least k vertices, in path order. Works on adjacency
// lists, so only max_vertices bounds it.
std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, int k, const OracleLimits& limits = {});

bool is_induced_path(const Graph& g, const std::vector<Vertex>& path);
bool is_induced_matching(const Graph& g, const std::vector<Edge>& matching);

}  // namespace vck
