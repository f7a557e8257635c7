#pragma once

#include <array>
#include <optional>
#include <vector>

#include "vck/errors.hpp"
#include "vck/graph.hpp"
#include "vck/instance.hpp"
#include "vck/oracles.hpp"

namespace vck {

// Duplicates the last element until the length is a power of two.
template <class T>
std::vector<T> pad_to_power_of_two(std::vector<T> xs) {
    if (xs.empty()) throw InputError("pad_to_power_of_two: empty list");
    std::size_t r = 1;
    while (r < xs.size()) r <<= 1;
    while (xs.size() < r) xs.push_back(xs.back());
    return xs;
}

int log2_exact(std::size_t r);

// Instance i (0-based, after padding) is encoded by the bits of (i + 1) mod r,
// so the last instance gets the all-zero string.
bool selector_bit(std::size_t i, std::size_t r, int j);

// A bipartite source instance: sides a and b partition the vertices.
struct BipartiteInput {
    Graph graph;
    VertexSet a;
    VertexSet b;
    int k = 1;
};

struct HamInput {
    Graph graph;
    Vertex s = 0;
    Vertex t = 1;
};

// G - Y is a disjoint union of single edges and Y is independent.
struct SplitInput {
    Graph graph;
    VertexSet y;
    int k = 0;
};

// embed[i][v] is the composed vertex that plays vertex v of padded input i.
struct BicliqueComposition {
    Instance instance;
    std::size_t inputs = 0;  // r after padding
    std::vector<std::vector<Vertex>> embed;
    std::vector<std::vector<Vertex>> p, q;  // bit selector sides, n+1 each
    std::vector<Vertex> d;
};

// Induced K_{s,t} test whose answer is the OR of the inputs' K_{k,k} questions.
// Throws ClassError unless all inputs share |A|, |B| and k.
BicliqueComposition compose_biclique(const std::vector<BipartiteInput>& inputs);
// Left side of size s, right side of size t, built from a K_{k,k} in input i.
Biclique biclique_witness(const BicliqueComposition& c, std::size_t i, const Biclique& input_witness);

struct PathComposition {
    Instance instance;
    bool canonical = false;  // inputs were solved directly
    std::size_t inputs = 0;
    int n = 0;
    int path_length = 0;
    std::vector<Vertex> path_a, path_b, path_c;  // from x to y
    std::vector<Vertex> v_star;
    std::vector<std::vector<Vertex>> e;  // e[j][h] for j != h
    std::vector<Vertex> z;
    std::vector<std::vector<int>> label;  // label[i][v]: position of v in v*_1..v*_n
};

// Smallest path length for which the scaled composition still acts as an OR.
int induced_path_min_length(int n);

// Without a path length the paths have n^3 vertices, and inputs with n < 9
// are decided directly into a canonical one-vertex yes or no instance. With a
// path length L the construction is used at any n >= 2 and L must be at least
// induced_path_min_length(n) (RangeError otherwise).
PathComposition compose_induced_path(const std::vector<HamInput>& inputs, std::optional<int> path_length = {});
// The explicit solution for a Hamiltonian s-t path of input i, in path order.
std::vector<Vertex> induced_path_witness(const PathComposition& c, std::size_t i, const std::vector<Vertex>& ham_path);

struct MatchingComposition {
    Instance instance;
    std::size_t inputs = 0;
    std::vector<std::vector<Vertex>> embed;
    // triples[j][s] = {x, y, z}
    std::vector<std::vector<std::array<Vertex, 3>>> triples;
};

MatchingComposition compose_induced_matching(const std::vector<BipartiteInput>& inputs);
std::vector<Edge> induced_matching_witness(const MatchingComposition& c, std::size_t i,
                                           const std::vector<Edge>& input_matching);

// Psi_{s,t}: a 5-clique (0..4) and a 4-clique (5..8), z1 = 9 joined to the
// 5-clique, z2 = 10 joined to the 4-clique, z1z2 an edge, then s pendants on z1
// and t pendants on z2. The cover is 0..10.
struct PsiGraph {
    Graph graph;
    VertexSet cover;
};
PsiGraph make_psi(int s, int t);

struct PsiComposition {
    Instance instance;
    std::size_t inputs = 0;
    std::vector<std::vector<Vertex>> embed;
    std::vector<std::array<Vertex, 2>> selectors;  // {s0_j, s1_j}
    std::vector<Vertex> c1, c2;
    Vertex z1 = -1, z2 = -1;
};

// Throws InputError when an input is not of the split form.
PsiComposition compose_psi(const std::vector<SplitInput>& inputs);
// image[x] for every vertex x of make_psi(k, log r), from an independent set of
// size k in input i.
std::vector<Vertex> psi_witness(const PsiComposition& c, std::size_t i, const VertexSet& independent);

struct MinorTransform {
    std::optional<bool> verdict;  // set when decided without a minor test
    Instance instance;            // minor-test instance, cover T
    int code_size = 0;            // |T| / r
};

// Throws InputError when (T, N) is not a bipartition or N is not regular.
MinorTransform perfect_code_to_minor(const Graph& g, const VertexSet& terminals, const VertexSet& n_side, int k);

// G plus 2n+2c isolated vertices A and 2n+2c vertices B joined to A and V(G).
// The result has an induced K_{c, k+2n+2c} iff G has an independent set of size k.
Instance is_to_biclique_instance(const Graph& g, int k, int c);

}  // namespace vck
