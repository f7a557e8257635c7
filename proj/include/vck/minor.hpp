#pragma once

#include <vector>

#include "vck/graph.hpp"

namespace vck {

// branch_sets[h] is the set of host vertices that model query vertex h.
struct MinorModel {
    std::vector<VertexSet> branch_sets;
    friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

bool verify_minor_model(const Graph& host, const Graph& query, const MinorModel& model);

struct PrunedModel {
    Graph graph;  // G*, relabelled densely
    MinorModel model;
    std::vector<Vertex> original;  // original[i] = id in the input host graph
};

// Keeps one host edge per query edge (the lexicographically lowest between the
// two branch sets), a tree inside each branch set whose leaves are all endpoints
// of kept edges, and the lowest vertex of each branch set that has none. Every
// other vertex and edge is dropped, so max degree is at most max degree of the
// query graph. Throws ModelError if the model is invalid.
PrunedModel prune_minor_model(const Graph& host, const Graph& query, const MinorModel& model);

}  // namespace vck
