#include "vck/structures.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>

#include "vck/bits.hpp"
#include "vck/errors.hpp"

namespace vck {
namespace {

void check_dp(const Graph& g) {
    if (g.order() > kSubsetDpLimit)
        throw CeilingExceeded("subset DP limited to " + std::to_string(kSubsetDpLimit) + " vertices, got " +
                              std::to_string(g.order()));
}

std::vector<Vertex> tree_path(const std::vector<Vertex>& parent, Vertex v) {
    std::vector<Vertex> out;
    for (; v >= 0; v = parent[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

// Closes the walk root..u, u-w, w..root into a simple cycle through the lowest
// common ancestor of u and w.
std::vector<Vertex> cycle_through_lca(const std::vector<Vertex>& parent, Vertex u, Vertex w) {
    auto pu = tree_path(parent, u);
    auto pw = tree_path(parent, w);
    while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
        pu.pop_back();
        pw.pop_back();
    }
    // pu and pw now end at the common ancestor.
    std::vector<Vertex> cycle(pu.begin(), pu.end());
    for (std::size_t i = pw.size() - 1; i-- > 0;) cycle.push_back(pw[i]);
    return cycle;
}

std::optional<std::vector<Vertex>> bfs_cycle(const Graph& g, bool odd_only) {
    std::optional<std::vector<Vertex>> best;
    const auto n = static_cast<std::size_t>(g.order());
    for (Vertex root = 0; root < g.order(); ++root) {
        std::vector<int> level(n, -1);
        std::vector<Vertex> parent(n, -1);
        std::deque<Vertex> queue{root};
        level[static_cast<std::size_t>(root)] = 0;
        std::optional<std::vector<Vertex>> found;
        while (!queue.empty() && !found) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                auto lw = level[static_cast<std::size_t>(w)];
                if (lw < 0) {
                    level[static_cast<std::size_t>(w)] = level[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    bool same = lw == level[static_cast<std::size_t>(u)];
                    if (odd_only && !same) continue;
                    if (!odd_only && lw < level[static_cast<std::size_t>(u)]) continue;
                    found = cycle_through_lca(parent, u, w);
                    break;
                }
            }
        }
        if (found && (!best || found->size() < best->size())) best = std::move(found);
    }
    return best;
}

struct ChordlessSearch {
    const std::vector<Mask>& adj;
    int min_length;
    Vertex root = 0;
    std::vector<Vertex> path;

    // path[0] = root; candidates must lie in `allowed`; `forbid` holds the
    // neighbourhoods of the interior path vertices.
    bool extend(Mask allowed, Mask forbid) {
        Vertex last = path.back();
        Mask cand = adj[static_cast<std::size_t>(last)] & allowed & ~forbid;
        Mask root_nbrs = adj[static_cast<std::size_t>(root)];
        bool first_step = path.size() == 1;
        while (cand) {
            Vertex w = lowest(cand);
            cand &= cand - 1;
            if (!first_step && (root_nbrs & bit(w))) {
                if (static_cast<int>(path.size()) + 1 >= min_length) {
                    path.push_back(w);
                    return true;
                }
                continue;
            }
            path.push_back(w);
            Mask next_forbid = first_step ? forbid : forbid | adj[static_cast<std::size_t>(last)];
            if (extend(allowed & ~bit(w), next_forbid)) return true;
            path.pop_back();
        }
        return false;
    }
};

using EmbedCallback = std::function<bool(const std::vector<Vertex>&)>;

// Enumerates embeddings of h into g (as a subgraph) using only vertices of
// `avail`. When pin_query >= 0 it is mapped to pin_host. Stops when cb returns true.
bool enumerate_embeddings(const std::vector<Mask>& adj, const Graph& h, Mask avail, Vertex pin_query, Vertex pin_host,
                          const EmbedCallback& cb) {
    const int k = h.order();
    std::vector<Vertex> order;
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    auto push_component = [&](Vertex start) {
        std::deque<Vertex> queue{start};
        placed[static_cast<std::size_t>(start)] = 1;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            order.push_back(x);
            for (Vertex y : h.neighbors(x))
                if (!placed[static_cast<std::size_t>(y)]) {
                    placed[static_cast<std::size_t>(y)] = 1;
                    queue.push_back(y);
                }
        }
    };
    if (pin_query >= 0) push_component(pin_query);
    while (static_cast<int>(order.size()) < k) {
        Vertex best = -1;
        for (Vertex x = 0; x < k; ++x)
            if (!placed[static_cast<std::size_t>(x)] && (best < 0 || h.degree(x) > h.degree(best))) best = x;
        push_component(best);
    }

    std::vector<Vertex> image(static_cast<std::size_t>(k), -1);
    std::function<bool(std::size_t, Mask)> go = [&](std::size_t i, Mask used) -> bool {
        if (i == order.size()) return cb(image);
        Vertex x = order[i];
        Mask cand = avail & ~used;
        if (i == 0 && pin_query >= 0) cand &= bit(pin_host);
        for (Vertex y : h.neighbors(x)) {
            Vertex iy = image[static_cast<std::size_t>(y)];
            if (iy >= 0) cand &= adj[static_cast<std::size_t>(iy)];
        }
        const int need = h.degree(x);
        while (cand) {
            Vertex v = lowest(cand);
            cand &= cand - 1;
            if (popcount(adj[static_cast<std::size_t>(v)]) < need) continue;
            image[static_cast<std::size_t>(x)] = v;
            if (go(i + 1, used | bit(v))) return true;
            image[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    };
    return go(0, 0);
}

std::vector<Mask> copies_through(const std::vector<Mask>& adj, const Graph& h, Mask avail, Vertex v) {
    std::set<Mask> seen;
    for (Vertex x = 0; x < h.order(); ++x) {
        enumerate_embeddings(adj, h, avail, x, v, [&](const std::vector<Vertex>& img) {
            Mask m = 0;
            for (Vertex u : img) m |= bit(u);
            seen.insert(m);
            return false;
        });
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) { return bfs_cycle(g, false); }

std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g) { return bfs_cycle(g, true); }

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(u)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::vector<Vertex>> chordless_cycle(const Graph& g, int min_length) {
    auto adj = adjacency_masks(g);
    ChordlessSearch search{adj, std::max(min_length, 3), 0, {}};
    for (Vertex root = 0; root < g.order(); ++root) {
        search.root = root;
        search.path = {root};
        Mask allowed = full_mask(g.order()) & ~full_mask(root + 1);
        if (search.extend(allowed, 0)) return search.path;
    }
    return std::nullopt;
}

bool is_chordal(const Graph& g) {
    // Maximum cardinality search, then check the reverse order is a perfect
    // elimination ordering.
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (position[static_cast<std::size_t>(v)] < 0 &&
                (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
                pick = v;
        position[static_cast<std::size_t>(pick)] = step;
        order.push_back(pick);
        for (Vertex w : g.neighbors(pick))
            if (position[static_cast<std::size_t>(w)] < 0) ++weight[static_cast<std::size_t>(w)];
    }
    // For each v, its neighbours visited earlier must form a clique; it suffices
    // to check they are adjacent to the latest of them.
    for (Vertex v : order) {
        std::vector<Vertex> earlier;
        for (Vertex w : g.neighbors(v))
            if (position[static_cast<std::size_t>(w)] < position[static_cast<std::size_t>(v)]) earlier.push_back(w);
        if (earlier.size() < 2) continue;
        Vertex latest = *std::max_element(earlier.begin(), earlier.end(), [&](Vertex a, Vertex b) {
            return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
        });
        for (Vertex w : earlier)
            if (w != latest && !g.adjacent(w, latest)) return false;
    }
    return true;
}

std::optional<std::vector<Vertex>> hamiltonian_path(const Graph& g, Vertex s, Vertex t) {
    const int n = g.order();
    if (n == 0) return std::nullopt;
    check_dp(g);
    auto adj = adjacency_masks(g);
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint32_t> ends(states, 0);
    for (Vertex v = 0; v < n; ++v)
        if (s < 0 || v == s) ends[bit(v)] = static_cast<std::uint32_t>(bit(v));
    for (std::size_t mask = 1; mask < states; ++mask) {
        Mask e = ends[mask];
        for_each_bit(e, [&](int v) {
            Mask out = adj[static_cast<std::size_t>(v)] & ~static_cast<Mask>(mask);
            for_each_bit(out, [&](int w) { ends[mask | bit(w)] |= static_cast<std::uint32_t>(bit(w)); });
        });
    }
    Mask full = full_mask(n);
    Mask final_ends = ends[full];
    if (t >= 0) final_ends &= bit(t);
    if (!final_ends) return std::nullopt;
    std::vector<Vertex> path;
    Mask mask = full;
    Vertex cur = lowest(final_ends);
    while (true) {
        path.push_back(cur);
        Mask prev = mask & ~bit(cur);
        if (!prev) break;
        Mask options = ends[prev] & adj[static_cast<std::size_t>(cur)];
        cur = lowest(options);
        mask = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g) {
    if (g.order() < 3) return std::nullopt;
    check_dp(g);
    auto adj = adjacency_masks(g);
    // A path from 0 ending in a neighbour of 0 that covers every vertex.
    const int n = g.order();
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint32_t> ends(states, 0);
    ends[1] = 1;
    for (std::size_t mask = 1; mask < states; mask += 2) {
        Mask e = ends[mask];
        for_each_bit(e, [&](int v) {
            Mask out = adj[static_cast<std::size_t>(v)] & ~static_cast<Mask>(mask);
            for_each_bit(out, [&](int w) { ends[mask | bit(w)] |= static_cast<std::uint32_t>(bit(w)); });
        });
    }
    Mask full = full_mask(n);
    Mask final_ends = ends[full] & adj[0];
    if (!final_ends) return std::nullopt;
    std::vector<Vertex> path;
    Mask mask = full;
    Vertex cur = lowest(final_ends);
    while (true) {
        path.push_back(cur);
        Mask prev = mask & ~bit(cur);
        if (!prev) break;
        cur = lowest(ends[prev] & adj[static_cast<std::size_t>(cur)]);
        mask = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Vertex> longest_cycle(const Graph& g) {
    check_dp(g);
    auto adj = adjacency_masks(g);
    const int n = g.order();
    std::vector<Vertex> best;
    for (Vertex s = 0; s + 2 < n; ++s) {
        // Cycles whose lowest vertex is s; masks are relative to s.
        const int k = n - s;
        if (k <= static_cast<int>(best.size())) break;
        std::vector<Mask> rel(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) rel[static_cast<std::size_t>(i)] = adj[static_cast<std::size_t>(s + i)] >> s;
        const std::size_t states = std::size_t{1} << k;
        std::vector<std::uint32_t> ends(states, 0);
        ends[1] = 1;
        std::size_t best_mask = 0;
        int best_len = static_cast<int>(best.size());
        for (std::size_t mask = 1; mask < states; mask += 2) {
            Mask e = ends[mask];
            if (!e) continue;
            int len = popcount(mask);
            if (len >= 3 && len > best_len && (e & rel[0])) {
                best_len = len;
                best_mask = mask;
            }
            for_each_bit(e, [&](int v) {
                Mask out = rel[static_cast<std::size_t>(v)] & ~static_cast<Mask>(mask) & full_mask(k);
                for_each_bit(out, [&](int w) { ends[mask | bit(w)] |= static_cast<std::uint32_t>(bit(w)); });
            });
        }
        if (!best_mask) continue;
        std::vector<Vertex> cycle;
        Mask mask = best_mask;
        Vertex cur = lowest(ends[mask] & rel[0]);
        while (true) {
            cycle.push_back(cur + s);
            Mask prev = mask & ~bit(cur);
            if (!prev) break;
            cur = lowest(ends[prev] & rel[static_cast<std::size_t>(cur)]);
            mask = prev;
        }
        std::reverse(cycle.begin(), cycle.end());
        best = std::move(cycle);
    }
    return best;
}

std::vector<Vertex> longest_path(const Graph& g) {
    const int n = g.order();
    if (n == 0) return {};
    check_dp(g);
    auto adj = adjacency_masks(g);
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint32_t> ends(states, 0);
    for (Vertex v = 0; v < n; ++v) ends[bit(v)] = static_cast<std::uint32_t>(bit(v));
    std::size_t best_mask = 1;
    for (std::size_t mask = 1; mask < states; ++mask) {
        Mask e = ends[mask];
        if (!e) continue;
        if (popcount(mask) > popcount(best_mask)) best_mask = mask;
        for_each_bit(e, [&](int v) {
            Mask out = adj[static_cast<std::size_t>(v)] & ~static_cast<Mask>(mask);
            for_each_bit(out, [&](int w) { ends[mask | bit(w)] |= static_cast<std::uint32_t>(bit(w)); });
        });
    }
    std::vector<Vertex> path;
    Mask mask = best_mask;
    Vertex cur = lowest(ends[mask]);
    while (true) {
        path.push_back(cur);
        Mask prev = mask & ~bit(cur);
        if (!prev) break;
        cur = lowest(ends[prev] & adj[static_cast<std::size_t>(cur)]);
        mask = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<std::vector<Vertex>> subgraph_embedding(const Graph& g, const Graph& h) {
    if (h.order() > g.order() || h.size() > g.size()) return std::nullopt;
    auto adj = adjacency_masks(g);
    std::optional<std::vector<Vertex>> out;
    enumerate_embeddings(adj, h, full_mask(g.order()), -1, -1, [&](const std::vector<Vertex>& img) {
        out = img;
        return true;
    });
    return out;
}

std::optional<VertexSet> subgraph_copy(const Graph& g, const Graph& h) {
    auto emb = subgraph_embedding(g, h);
    if (!emb) return std::nullopt;
    return VertexSet(*emb);
}

std::vector<VertexSet> max_packing(const Graph& g, const Graph& h) {
    if (h.order() == 0) throw PropertyError("packing of the empty graph");
    auto adj = adjacency_masks(g);
    std::unordered_map<Mask, std::pair<int, Mask>> memo;  // best count, chosen copy (0 = skip)
    std::function<int(Mask)> best = [&](Mask avail) -> int {
        if (popcount(avail) < h.order()) return 0;
        if (auto it = memo.find(avail); it != memo.end()) return it->second.first;
        Vertex v = lowest(avail);
        int value = best(avail & ~bit(v));
        Mask choice = 0;
        for (Mask copy : copies_through(adj, h, avail, v)) {
            int with = 1 + best(avail & ~copy);
            if (with > value) {
                value = with;
                choice = copy;
            }
        }
        memo[avail] = {value, choice};
        return value;
    };
    Mask avail = full_mask(g.order());
    best(avail);
    std::vector<VertexSet> out;
    while (popcount(avail) >= h.order()) {
        auto it = memo.find(avail);
        if (it == memo.end() || it->second.first == 0) break;
        Mask choice = it->second.second;
        if (choice) {
            out.push_back(from_mask(choice));
            avail &= ~choice;
        } else {
            avail &= ~bit(lowest(avail));
        }
    }
    return out;
}

std::optional<std::vector<VertexSet>> perfect_packing(const Graph& g, const Graph& h) {
    if (h.order() == 0) throw PropertyError("packing of the empty graph");
    if (g.order() == 0 || g.order() % h.order() != 0) return std::nullopt;
    auto adj = adjacency_masks(g);
    std::unordered_map<Mask, Mask> memo;  // avail -> copy leading to success, 0 = failure
    std::function<bool(Mask)> solve = [&](Mask avail) -> bool {
        if (!avail) return true;
        if (auto it = memo.find(avail); it != memo.end()) return it->second != 0;
        Vertex v = lowest(avail);
        Mask found = 0;
        for (Mask copy : copies_through(adj, h, avail, v))
            if (solve(avail & ~copy)) {
                found = copy;
                break;
            }
        memo[avail] = found;
        return found != 0;
    };
    Mask avail = full_mask(g.order());
    if (!solve(avail)) return std::nullopt;
    std::vector<VertexSet> out;
    while (avail) {
        Mask copy = memo.at(avail);
        out.push_back(from_mask(copy));
        avail &= ~copy;
    }
    return out;
}

}  // namespace vck
