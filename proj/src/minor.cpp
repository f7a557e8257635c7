#include "vck/minor.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "vck/bits.hpp"
#include "vck/errors.hpp"

namespace vck {

std::vector<Mask> adjacency_masks(const Graph& g) {
    if (g.order() > kMaskBits)
        throw RangeError("bitset solvers support at most 64 vertices, got " + std::to_string(g.order()));
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= bit(w);
    return adj;
}

Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s) m |= bit(v);
    return m;
}

VertexSet from_mask(Mask m) {
    std::vector<Vertex> out;
    for_each_bit(m, [&](int v) { out.push_back(v); });
    return VertexSet(std::move(out));
}

bool verify_minor_model(const Graph& host, const Graph& query, const MinorModel& model) {
    if (model.branch_sets.size() != static_cast<std::size_t>(query.order())) return false;
    std::vector<int> owner(static_cast<std::size_t>(host.order()), -1);
    for (std::size_t h = 0; h < model.branch_sets.size(); ++h) {
        const auto& bs = model.branch_sets[h];
        if (bs.empty()) return false;
        for (Vertex v : bs) {
            if (v < 0 || v >= host.order()) return false;
            if (owner[static_cast<std::size_t>(v)] != -1) return false;
            owner[static_cast<std::size_t>(v)] = static_cast<int>(h);
        }
        if (!is_connected(host, bs)) return false;
    }
    for (auto e : query.edges()) {
        bool joined = false;
        for (Vertex a : model.branch_sets[static_cast<std::size_t>(e.u)]) {
            for (Vertex b : host.neighbors(a))
                if (owner[static_cast<std::size_t>(b)] == e.v) {
                    joined = true;
                    break;
                }
            if (joined) break;
        }
        if (!joined) return false;
    }
    return true;
}

namespace {

// BFS tree of host[bs] rooted at the lowest terminal, with non-terminal leaves
// stripped repeatedly. Returns the kept vertices and tree edges.
void steiner_tree(const Graph& host, const VertexSet& bs, const VertexSet& terminals, std::vector<Vertex>& keep,
                  std::vector<Edge>& tree_edges) {
    std::map<Vertex, Vertex> parent;
    std::deque<Vertex> queue{terminals[0]};
    parent[terminals[0]] = -1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : host.neighbors(v)) {
            if (bs.contains(w) && !parent.contains(w)) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    std::map<Vertex, int> child_count;
    for (auto [v, p] : parent)
        if (p >= 0) ++child_count[p];
    std::map<Vertex, bool> alive;
    for (auto [v, p] : parent) alive[v] = true;

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [v, p] : parent) {
            if (!alive[v] || terminals.contains(v) || child_count[v] > 0) continue;
            alive[v] = false;
            if (p >= 0) --child_count[p];
            changed = true;
        }
    }
    for (auto [v, p] : parent) {
        if (!alive[v]) continue;
        keep.push_back(v);
        if (p >= 0) tree_edges.push_back({std::min(v, p), std::max(v, p)});
    }
}

}  // namespace

PrunedModel prune_minor_model(const Graph& host, const Graph& query, const MinorModel& model) {
    if (!verify_minor_model(host, query, model)) throw ModelError("prune_minor_model: input is not a valid minor model");

    const auto& bs = model.branch_sets;
    std::vector<Edge> marked_edges;
    std::vector<std::vector<Vertex>> terminals(bs.size());
    for (auto e : query.edges()) {
        const VertexSet& to = bs[static_cast<std::size_t>(e.v)];
        bool found = false;
        for (Vertex a : bs[static_cast<std::size_t>(e.u)]) {
            for (Vertex b : host.neighbors(a)) {
                if (to.contains(b)) {
                    marked_edges.push_back({std::min(a, b), std::max(a, b)});
                    terminals[static_cast<std::size_t>(e.u)].push_back(a);
                    terminals[static_cast<std::size_t>(e.v)].push_back(b);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }

    std::vector<Vertex> kept;
    std::vector<std::vector<Vertex>> kept_per_set(bs.size());
    for (std::size_t h = 0; h < bs.size(); ++h) {
        VertexSet term(terminals[h]);
        if (term.empty()) {
            kept_per_set[h].push_back(bs[h][0]);
        } else {
            steiner_tree(host, bs[h], term, kept_per_set[h], marked_edges);
        }
        kept.insert(kept.end(), kept_per_set[h].begin(), kept_per_set[h].end());
    }

    VertexSet kept_set(kept);
    PrunedModel out;
    out.original = kept_set.items();
    std::vector<Vertex> local(static_cast<std::size_t>(host.order()), -1);
    for (std::size_t i = 0; i < out.original.size(); ++i) local[static_cast<std::size_t>(out.original[i])] = static_cast<Vertex>(i);

    GraphBuilder b(static_cast<int>(out.original.size()));
    if (host.has_labels())
        for (std::size_t i = 0; i < out.original.size(); ++i)
            b.set_label(static_cast<Vertex>(i), host.labels()[static_cast<std::size_t>(out.original[i])]);
    for (auto e : marked_edges) b.add_edge(local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]);
    out.graph = b.build();

    for (auto& part : kept_per_set) {
        std::vector<Vertex> mapped;
        for (Vertex v : part) mapped.push_back(local[static_cast<std::size_t>(v)]);
        out.model.branch_sets.emplace_back(std::move(mapped));
    }
    return out;
}

}  // namespace vck
