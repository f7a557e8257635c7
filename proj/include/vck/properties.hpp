#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

// p(n) = max over the stored polynomials, each given by coefficients
// c0 + c1*n + c2*n^2 + ... . Coefficients are non-negative, so p is
// non-decreasing. Keeping a list makes the union's pointwise maximum exact.
struct WitnessBound {
    std::vector<std::vector<long long>> polys;

    long long operator()(long long n) const;
    std::string describe() const;

    static WitnessBound poly(std::vector<long long> coeffs);
    static WitnessBound max(const WitnessBound& a, const WitnessBound& b);
    static WitnessBound sum(const WitnessBound& a, const WitnessBound& b);
};

// A graph property together with the constants the meta-kernels rely on.
// An empty (0-vertex) graph is never a member of a builtin property.
struct PropertySpec {
    std::string name;
    int c_pi = 0;
    WitnessBound p;
    // Every member has at least one edge.
    bool has_edge_guarantee = false;
    // Every member satisfies |V| <= p(vc); needed by the largest-induced kernel.
    bool bounded_members = false;
    // Membership survives adding vertices; then a witness exists iff member(G).
    bool upward_closed = false;
    // For perfect H-packing: |V(H)|. Users state packing targets as copy counts.
    int packing_unit = 0;
    // The query family of an f-minor property, or {H} for a packing.
    std::vector<Graph> family;

    std::function<bool(const Graph&)> member;
    // Any vertex set W with G[W] a member, not necessarily minimal.
    std::function<std::optional<VertexSet>(const Graph&)> find_witness;
    // Optional: a protected set D for vertex v of a member G.
    std::function<std::optional<VertexSet>(const Graph&, Vertex)> adjacency_witness;
    // Optional: vertex set of a largest induced subgraph that is a member.
    std::function<std::optional<VertexSet>(const Graph&)> largest_member;

    long long p_of(long long n) const { return p(n); }

    // A witness W such that G[W] is a member and no G[W'] with W' a proper
    // subset of W is. Found by repeatedly descending into a witness of G[W - v].
    std::optional<VertexSet> min_witness(const Graph& g) const;
};

PropertySpec k2_property();
PropertySpec odd_cycle_property();
// Induced cycles on at least `min_length` >= 4 vertices.
PropertySpec chordless_cycle_property(int min_length = 4);
PropertySpec f_minor_property(std::vector<Graph> family, std::string name = "f-minor:custom");
PropertySpec hamiltonian_cycle_property();
PropertySpec hamiltonian_path_property();
PropertySpec packing_property(const Graph& h, std::string name = "packing:custom");
PropertySpec contains_cycle_property();

PropertySpec union_props(const PropertySpec& a, const PropertySpec& b);
PropertySpec intersect_props(const PropertySpec& a, const PropertySpec& b);

// Grammar:  expr := term ('|' term)* ;  term := atom ('&' atom)* ;
//           atom := name | '(' expr ')'
// Names: k2, odd-cycle, chordless-cycle, chordless-cycle-ge:<l>, f-minor:<G>,<G>...,
// hamiltonian-cycle, hamiltonian-path, packing:<G> (alias perfect-h-packing:<G>),
// contains-cycle. Graph names follow named_graph(). Throws PropertyError.
PropertySpec parse_property(std::string_view text);

// Flips edges between v and vertices outside D = adjacency_witness(G, v) and
// checks membership is kept. Enumerates every flip pattern when there are at
// most `trials` of them, otherwise samples `trials` random patterns.
// Throws PropertyError if |D| > c_pi or the property has no adjacency witness,
// PreconditionError if G is not a member.
bool check_adjacency_characterization(const PropertySpec& p, const Graph& g, Vertex v, int trials,
                                      std::uint64_t seed = 1);

}  // namespace vck
