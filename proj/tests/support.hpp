#pragma once

// Test-side generators and brute-force reference implementations. These are
// deliberately naive and share no code with the library's solvers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "vck/graph.hpp"
#include "vck/minor.hpp"

namespace testing {

using vck::Graph;
using vck::Vertex;
using vck::VertexSet;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    vck::GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng) < p) b.add_edge(u, v);
    return b.build();
}

inline Graph graph_from_code(int n, std::uint64_t code) {
    vck::GraphBuilder b(n);
    int bitpos = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bitpos)
            if ((code >> bitpos) & 1) b.add_edge(u, v);
    return b.build();
}

inline VertexSet subset(int n, std::uint64_t mask) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1) out.push_back(v);
    return VertexSet(out);
}

inline bool covers(const Graph& g, std::uint64_t mask) {
    for (auto e : g.edges())
        if (!((mask >> e.u) & 1) && !((mask >> e.v) & 1)) return false;
    return true;
}

inline int brute_vertex_cover(const Graph& g) {
    int best = g.order();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
        if (covers(g, m)) best = std::min(best, __builtin_popcountll(m));
    return best;
}

inline int brute_independence(const Graph& g) { return g.order() - brute_vertex_cover(g); }

// Every simple cycle as a vertex sequence starting at its lowest vertex.
inline std::vector<std::vector<Vertex>> brute_cycles(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    const int n = g.order();
    std::vector<Vertex> path;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<void(Vertex)> dfs = [&](Vertex v) {
        for (Vertex w : g.neighbors(v)) {
            if (w == path[0] && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
            if (w <= path[0] || used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        used.assign(static_cast<std::size_t>(n), 0);
        used[static_cast<std::size_t>(s)] = 1;
        dfs(s);
    }
    return out;
}

inline bool chordless(const Graph& g, const std::vector<Vertex>& cyc) {
    const std::size_t k = cyc.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (g.adjacent(cyc[i], cyc[j])) return false;
        }
    return true;
}

inline bool brute_has_odd_cycle(const Graph& g) {
    for (const auto& c : brute_cycles(g))
        if (c.size() % 2 == 1) return true;
    return false;
}

inline bool brute_has_hole(const Graph& g, std::size_t min_len = 4) {
    for (const auto& c : brute_cycles(g))
        if (c.size() >= min_len && chordless(g, c)) return true;
    return false;
}

inline bool brute_hamiltonian_cycle(const Graph& g) {
    for (const auto& c : brute_cycles(g))
        if (static_cast<int>(c.size()) == g.order()) return true;
    return false;
}

inline bool brute_hamiltonian_path(const Graph& g) {
    const int n = g.order();
    if (n == 0) return false;
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    do {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Tries every assignment of host vertices to query vertices or "unused".
inline bool brute_has_minor(const Graph& g, const Graph& h) {
    const int n = g.order(), k = h.order();
    std::vector<int> label(static_cast<std::size_t>(n), 0);  // 0 = unused, x+1 = query vertex x
    while (true) {
        vck::MinorModel m;
        m.branch_sets.resize(static_cast<std::size_t>(k));
        std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(k));
        for (Vertex v = 0; v < n; ++v)
            if (label[static_cast<std::size_t>(v)] > 0) parts[static_cast<std::size_t>(label[static_cast<std::size_t>(v)] - 1)].push_back(v);
        for (int x = 0; x < k; ++x) m.branch_sets[static_cast<std::size_t>(x)] = VertexSet(parts[static_cast<std::size_t>(x)]);
        if (vck::verify_minor_model(g, h, m)) return true;
        int i = 0;
        while (i < n && label[static_cast<std::size_t>(i)] == k) label[static_cast<std::size_t>(i++)] = 0;
        if (i == n) return false;
        ++label[static_cast<std::size_t>(i)];
    }
}

// Induced subgraph isomorphic to h, by trying every injective map.
inline bool brute_has_induced(const Graph& g, const Graph& h) {
    const int n = g.order(), k = h.order();
    if (k > n) return false;
    std::vector<Vertex> img;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool()> go = [&]() -> bool {
        auto x = static_cast<Vertex>(img.size());
        if (x == k) return true;
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (Vertex y = 0; y < x && ok; ++y) ok = h.adjacent(x, y) == g.adjacent(v, img[static_cast<std::size_t>(y)]);
            if (!ok) continue;
            used[static_cast<std::size_t>(v)] = 1;
            img.push_back(v);
            if (go()) return true;
            img.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    return go();
}

inline bool is_valid_graph(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] == v || nb[i] < 0 || nb[i] >= g.order()) return false;
            if (i > 0 && nb[i - 1] >= nb[i]) return false;
            if (!std::binary_search(g.neighbors(nb[i]).begin(), g.neighbors(nb[i]).end(), v)) return false;
        }
    }
    return true;
}

}  // namespace testing
