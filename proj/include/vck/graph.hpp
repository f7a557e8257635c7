#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vck {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs);
    explicit VertexSet(std::vector<Vertex> vs);

    bool contains(Vertex v) const;
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    Vertex operator[](std::size_t i) const { return items_[i]; }
    const std::vector<Vertex>& items() const { return items_; }

    void insert(Vertex v);
    void erase(Vertex v);

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

private:
    std::vector<Vertex> items_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

// Simple undirected graph on vertices 0..n-1. Values are immutable; use
// GraphBuilder to construct or modify.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;
    int max_degree() const;
    int min_degree() const;

    // Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    // Label of v, or its decimal id when unlabeled.
    std::string label(Vertex v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_ && a.labels_ == b.labels_; }

private:
    friend class GraphBuilder;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0);
    explicit GraphBuilder(const Graph& g);

    int order() const { return static_cast<int>(adj_.size()); }
    Vertex add_vertex(std::string label = {});
    // Parallel edges are collapsed. Self-loops and out-of-range ids throw RangeError.
    void add_edge(Vertex u, Vertex v);
    void add_clique(std::span<const Vertex> vs);
    void add_biclique(std::span<const Vertex> a, std::span<const Vertex> b);
    void remove_edge(Vertex u, Vertex v);
    void set_label(Vertex v, std::string label);

    Graph build() const;

private:
    void check(Vertex v) const;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    bool labelled_ = false;
};

Graph graph_from_edges(int n, std::span<const Edge> edges);
Graph graph_from_edges(int n, std::initializer_list<Edge> edges);

struct InducedSubgraph {
    Graph graph;
    // original[i] is the id in the parent graph of vertex i.
    std::vector<Vertex> original;

    VertexSet to_original(const VertexSet& s) const;
    // Maps parent ids to local ids, dropping vertices not kept.
    VertexSet to_local(const VertexSet& s) const;
};

// Keeps the vertices of s, relabelled densely in increasing id order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);

bool is_vertex_cover(const Graph& g, const VertexSet& x);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
// N(v) induces a clique.
bool is_simplicial(const Graph& g, Vertex v);
bool is_connected(const Graph& g, const VertexSet& s);

VertexSet all_vertices(const Graph& g);
VertexSet neighborhood(const Graph& g, Vertex v);
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);

// Scans edges in lexicographic order and takes both endpoints of every edge not
// yet covered. The result is at most twice the minimum cover.
VertexSet greedy_vertex_cover(const Graph& g);

// Merges u and v into a single vertex adjacent to N({u,v}). The merged vertex
// takes id min(u,v); ids above max(u,v) shift down by one. Labels are dropped.
Graph contract_edge(const Graph& g, Vertex u, Vertex v);

// Image of each vertex of g under contract_edge(g, u, v).
std::vector<Vertex> contraction_map(int n, Vertex u, Vertex v);

}  // namespace vck
