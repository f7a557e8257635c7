#include "vck/graph.hpp"

#include <algorithm>
#include <deque>

#include "vck/errors.hpp"

namespace vck {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }

void VertexSet::insert(Vertex v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v) items_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it != items_.end() && *it == v) items_.erase(it);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

Graph::Graph(int n) {
    if (n < 0) throw RangeError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = neighbors(u);
    const auto& b = neighbors(v);
    return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                                : std::binary_search(b.begin(), b.end(), u);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = order();
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.push_back({u, v});
    return out;
}

std::string Graph::label(Vertex v) const {
    if (labels_.empty() || labels_[static_cast<std::size_t>(v)].empty()) return std::to_string(v);
    return labels_[static_cast<std::size_t>(v)];
}

GraphBuilder::GraphBuilder(int n) {
    if (n < 0) throw RangeError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    labels_.resize(static_cast<std::size_t>(n));
}

GraphBuilder::GraphBuilder(const Graph& g) : adj_(g.adj_), labels_(g.labels_), labelled_(g.has_labels()) {
    labels_.resize(adj_.size());
}

Vertex GraphBuilder::add_vertex(std::string label) {
    if (!label.empty()) labelled_ = true;
    adj_.emplace_back();
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(adj_.size() - 1);
}

void GraphBuilder::check(Vertex v) const {
    if (v < 0 || v >= order())
        throw RangeError("vertex id " + std::to_string(v) + " out of range for n=" + std::to_string(order()));
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw RangeError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
}

void GraphBuilder::add_clique(std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
}

void GraphBuilder::add_biclique(std::span<const Vertex> a, std::span<const Vertex> b) {
    for (Vertex u : a)
        for (Vertex v : b) add_edge(u, v);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    std::erase(adj_[static_cast<std::size_t>(u)], v);
    std::erase(adj_[static_cast<std::size_t>(v)], u);
}

void GraphBuilder::set_label(Vertex v, std::string label) {
    check(v);
    if (!label.empty()) labelled_ = true;
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

Graph GraphBuilder::build() const {
    Graph g;
    g.adj_ = adj_;
    std::size_t twice = 0;
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        twice += a.size();
    }
    g.edge_count_ = twice / 2;
    if (labelled_) g.labels_ = labels_;
    return g;
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto e : edges) b.add_edge(e.u, e.v);
    return b.build();
}

Graph graph_from_edges(int n, std::initializer_list<Edge> edges) {
    return graph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

VertexSet InducedSubgraph::to_original(const VertexSet& s) const {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(original[static_cast<std::size_t>(v)]);
    return VertexSet(std::move(out));
}

VertexSet InducedSubgraph::to_local(const VertexSet& s) const {
    std::vector<Vertex> out;
    for (Vertex v : s) {
        auto it = std::lower_bound(original.begin(), original.end(), v);
        if (it != original.end() && *it == v) out.push_back(static_cast<Vertex>(it - original.begin()));
    }
    return VertexSet(std::move(out));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
    InducedSubgraph out;
    for (Vertex v : s) {
        if (v < 0 || v >= g.order()) throw RangeError("vertex id " + std::to_string(v) + " out of range");
        local[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original.size());
        out.original.push_back(v);
    }
    GraphBuilder b(static_cast<int>(out.original.size()));
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        Vertex v = out.original[i];
        if (g.has_labels()) b.set_label(static_cast<Vertex>(i), g.labels()[static_cast<std::size_t>(v)]);
        for (Vertex w : g.neighbors(v)) {
            Vertex lw = local[static_cast<std::size_t>(w)];
            if (lw > static_cast<Vertex>(i)) b.add_edge(static_cast<Vertex>(i), lw);
        }
    }
    out.graph = b.build();
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
    return induced_subgraph(g, set_difference(all_vertices(g), s));
}

bool is_vertex_cover(const Graph& g, const VertexSet& x) {
    for (Vertex v : x)
        if (v < 0 || v >= g.order()) return false;
    for (auto e : g.edges())
        if (!x.contains(e.u) && !x.contains(e.v)) return false;
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_simplicial(const Graph& g, Vertex v) {
    const auto& n = g.neighbors(v);
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = i + 1; j < n.size(); ++j)
            if (!g.adjacent(n[i], n[j])) return false;
    return true;
}

bool is_connected(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::deque<Vertex> queue{s[0]};
    seen[static_cast<std::size_t>(s[0])] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)] && s.contains(w)) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == s.size();
}

VertexSet all_vertices(const Graph& g) {
    std::vector<Vertex> vs(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) vs[static_cast<std::size_t>(v)] = v;
    return VertexSet(std::move(vs));
}

VertexSet neighborhood(const Graph& g, Vertex v) { return VertexSet(g.neighbors(v)); }

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
    if (s.empty()) return all_vertices(g);
    VertexSet out = neighborhood(g, s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) out = set_intersection(out, neighborhood(g, s[i]));
    return out;
}

VertexSet greedy_vertex_cover(const Graph& g) {
    std::vector<char> taken(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> out;
    for (auto e : g.edges()) {
        if (taken[static_cast<std::size_t>(e.u)] || taken[static_cast<std::size_t>(e.v)]) continue;
        taken[static_cast<std::size_t>(e.u)] = taken[static_cast<std::size_t>(e.v)] = 1;
        out.push_back(e.u);
        out.push_back(e.v);
    }
    return VertexSet(std::move(out));
}

std::vector<Vertex> contraction_map(int n, Vertex u, Vertex v) {
    Vertex lo = std::min(u, v), hi = std::max(u, v);
    std::vector<Vertex> image(static_cast<std::size_t>(n));
    for (Vertex w = 0; w < n; ++w) image[static_cast<std::size_t>(w)] = w == hi ? lo : (w > hi ? w - 1 : w);
    return image;
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw RangeError("contract_edge: vertex out of range");
    if (u == v || !g.adjacent(u, v))
        throw ContractError("contract_edge: {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    auto image = contraction_map(g.order(), u, v);
    GraphBuilder b(g.order() - 1);
    for (auto e : g.edges()) {
        Vertex a = image[static_cast<std::size_t>(e.u)], c = image[static_cast<std::size_t>(e.v)];
        if (a != c) b.add_edge(a, c);
    }
    return b.build();
}

}  // namespace vck
