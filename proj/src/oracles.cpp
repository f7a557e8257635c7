#include "vck/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "vck/bits.hpp"
#include "vck/errors.hpp"
#include "vck/structures.hpp"

namespace vck {

void enforce_ceiling(const Graph& g, const OracleLimits& limits, const char* what) {
    if (g.order() > limits.max_vertices)
        throw CeilingExceeded(std::string(what) + ": " + std::to_string(g.order()) +
                              " vertices exceeds the oracle ceiling of " + std::to_string(limits.max_vertices));
}

namespace {

void enforce_bitset(const Graph& g, const OracleLimits& limits, const char* what) {
    enforce_ceiling(g, limits, what);
    if (g.order() > kMaskBits)
        throw CeilingExceeded(std::string(what) + ": bitset solver limited to 64 vertices");
}

Graph sub_of(const Graph& g, Mask m) { return induced_subgraph(g, from_mask(m)).graph; }

VertexSet lift(Mask m, const VertexSet& local) {
    auto members = from_mask(m);
    std::vector<Vertex> out;
    for (Vertex v : local) out.push_back(members[static_cast<std::size_t>(v)]);
    return VertexSet(std::move(out));
}

// Has the class `m` a witness of the property (i.e. is it not property-free)?
bool class_contains(const Graph& g, const PropertySpec& p, Mask m) {
    if (!m) return false;
    Graph sub = sub_of(g, m);
    if (p.upward_closed) return p.member(sub);
    return p.find_witness(sub).has_value();
}

Mask mis_mask(const std::vector<Mask>& adj, Mask avail) {
    if (!avail) return 0;
    Vertex min_v = -1, max_v = -1;
    int min_d = 65, max_d = -1;
    for_each_bit(avail, [&](int v) {
        int d = popcount(adj[static_cast<std::size_t>(v)] & avail);
        if (d < min_d) min_d = d, min_v = v;
        if (d > max_d) max_d = d, max_v = v;
    });
    if (min_d <= 1) return bit(min_v) | mis_mask(adj, avail & ~bit(min_v) & ~adj[static_cast<std::size_t>(min_v)]);
    if (max_d == 0) return avail;
    Mask with = bit(max_v) | mis_mask(adj, avail & ~bit(max_v) & ~adj[static_cast<std::size_t>(max_v)]);
    Mask without = mis_mask(adj, avail & ~bit(max_v));
    return popcount(with) >= popcount(without) ? with : without;
}

struct MaskVectorHash {
    std::size_t operator()(const std::vector<Mask>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Mask m : v) h = (h ^ m) * 1099511628211ull + (h >> 29);
        return h;
    }
};

class MinorSearch {
public:
    MinorSearch(const Graph& g, const Graph& h) : h_(h), adj_(adjacency_masks(g)) {
        delta_ = h.min_degree();
        is_clique_ = h.size() == static_cast<std::size_t>(h.order()) * static_cast<std::size_t>(h.order() - 1) / 2;
    }

    std::optional<MinorModel> run(const Graph& g) {
        std::vector<Mask> parts;
        for (Vertex v = 0; v < g.order(); ++v) parts.push_back(bit(v));
        if (search(parts)) return model_;
        return std::nullopt;
    }

private:
    bool search(std::vector<Mask> parts) {
        const int s = static_cast<int>(parts.size());
        if (s < h_.order()) return false;
        std::sort(parts.begin(), parts.end());
        if (!seen_.insert(parts).second) return false;

        std::vector<Mask> reach(static_cast<std::size_t>(s), 0);
        for (int i = 0; i < s; ++i)
            for_each_bit(parts[static_cast<std::size_t>(i)], [&](int v) { reach[static_cast<std::size_t>(i)] |= adj_[static_cast<std::size_t>(v)]; });
        std::vector<Mask> sadj(static_cast<std::size_t>(s), 0);
        std::size_t edges = 0;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                if (reach[static_cast<std::size_t>(i)] & parts[static_cast<std::size_t>(j)]) {
                    sadj[static_cast<std::size_t>(i)] |= bit(j);
                    sadj[static_cast<std::size_t>(j)] |= bit(i);
                    ++edges;
                }
        if (edges < h_.size()) return false;

        GraphBuilder b(s);
        for (int i = 0; i < s; ++i)
            for_each_bit(sadj[static_cast<std::size_t>(i)], [&](int j) {
                if (j > i) b.add_edge(i, j);
            });
        Graph quotient = b.build();
        if (auto emb = subgraph_embedding(quotient, h_)) {
            model_.branch_sets.clear();
            for (Vertex x : *emb) model_.branch_sets.push_back(from_mask(parts[static_cast<std::size_t>(x)]));
            return true;
        }
        if (s == h_.order()) return false;

        auto merged = [&](int i, int j) {
            std::vector<Mask> next;
            for (int x = 0; x < s; ++x)
                if (x != i && x != j) next.push_back(parts[static_cast<std::size_t>(x)]);
            next.push_back(parts[static_cast<std::size_t>(i)] | parts[static_cast<std::size_t>(j)]);
            return next;
        };
        auto removed = [&](int i) {
            std::vector<Mask> next;
            for (int x = 0; x < s; ++x)
                if (x != i) next.push_back(parts[static_cast<std::size_t>(x)]);
            return next;
        };

        // A part of degree below the query's minimum degree cannot be a branch
        // set on its own: it is either unused or merged with a neighbour.
        for (int i = 0; i < s; ++i) {
            int d = popcount(sadj[static_cast<std::size_t>(i)]);
            const Mask nbi = sadj[static_cast<std::size_t>(i)];
            bool simplicial = true;
            for_each_bit(nbi, [&](int j) {
                if (nbi & ~bit(j) & ~sadj[static_cast<std::size_t>(j)]) simplicial = false;
            });
            if (is_clique_ && simplicial && d < h_.order() - 1) return search(removed(i));
            if (d < delta_) {
                if (search(removed(i))) return true;
                bool found = false;
                for_each_bit(sadj[static_cast<std::size_t>(i)], [&](int j) {
                    if (!found && search(merged(i, j))) found = true;
                });
                return found;
            }
        }
        for (int i = 0; i < s; ++i) {
            Mask nb = sadj[static_cast<std::size_t>(i)] & ~full_mask(i + 1);
            bool found = false;
            for_each_bit(nb, [&](int j) {
                if (!found && search(merged(i, j))) found = true;
            });
            if (found) return true;
        }
        return false;
    }

    const Graph& h_;
    std::vector<Mask> adj_;
    int delta_ = 0;
    bool is_clique_ = false;
    std::unordered_set<std::vector<Mask>, MaskVectorHash> seen_;
    MinorModel model_;
};

}  // namespace

std::optional<VertexSet> solve_deletion(const Graph& g, const PropertySpec& p, int k, const OracleLimits& limits) {
    enforce_bitset(g, limits, "solve_deletion");
    if (k < 0) return std::nullopt;
    std::unordered_map<Mask, int> failed;  // alive set -> largest budget known to fail
    std::function<std::optional<Mask>(Mask, int)> go = [&](Mask alive, int budget) -> std::optional<Mask> {
        if (auto it = failed.find(alive); it != failed.end() && it->second >= budget) return std::nullopt;
        auto w = p.min_witness(sub_of(g, alive));
        if (!w) return Mask{0};
        if (budget > 0) {
            for (Vertex v : lift(alive, *w)) {
                if (auto rest = go(alive & ~bit(v), budget - 1)) return *rest | bit(v);
            }
        }
        auto& f = failed[alive];
        f = std::max(f, budget);
        return std::nullopt;
    };
    auto found = go(full_mask(g.order()), k);
    if (!found) return std::nullopt;
    return from_mask(*found);
}

std::optional<VertexSet> solve_largest_induced(const Graph& g, const PropertySpec& p, int k,
                                               const OracleLimits& limits) {
    enforce_bitset(g, limits, "solve_largest_induced");
    if (k > g.order()) return std::nullopt;
    if (p.largest_member) {
        auto best = p.largest_member(g);
        if (best && static_cast<int>(best->size()) >= k) return best;
        return std::nullopt;
    }
    const int n = g.order();
    int top = n;
    if (p.bounded_members) {
        int vc = n - static_cast<int>(max_independent_set(g, limits).size());
        top = static_cast<int>(std::min<long long>(n, p.p_of(vc)));
    }
    for (int size = top; size >= std::max(k, 1); --size) {
        std::vector<char> pick(static_cast<std::size_t>(n), 0);
        std::fill(pick.end() - size, pick.end(), 1);
        do {
            Mask m = 0;
            for (Vertex v = 0; v < n; ++v)
                if (pick[static_cast<std::size_t>(v)]) m |= bit(v);
            if (p.member(sub_of(g, m))) return from_mask(m);
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return std::nullopt;
}

std::optional<std::vector<int>> solve_partition(const Graph& g, const PropertySpec& p, int q,
                                                const OracleLimits& limits) {
    enforce_bitset(g, limits, "solve_partition");
    const int n = g.order();
    if (n == 0) return std::vector<int>{};
    if (q <= 0) return std::nullopt;
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    std::vector<Mask> members(static_cast<std::size_t>(q), 0);
    std::function<bool(Vertex, int)> go = [&](Vertex v, int used) -> bool {
        if (v == n) return true;
        for (int c = 0; c < std::min(q, used + 1); ++c) {
            Mask next = members[static_cast<std::size_t>(c)] | bit(v);
            if (class_contains(g, p, next)) continue;
            members[static_cast<std::size_t>(c)] = next;
            cls[static_cast<std::size_t>(v)] = c;
            if (go(v + 1, std::max(used, c + 1))) return true;
            members[static_cast<std::size_t>(c)] &= ~bit(v);
        }
        return false;
    };
    if (!go(0, 0)) return std::nullopt;
    return cls;
}

std::optional<MinorModel> find_minor(const Graph& g, const Graph& h, const OracleLimits& limits) {
    enforce_bitset(g, limits, "find_minor");
    if (h.order() > limits.max_query_vertices)
        throw CeilingExceeded("find_minor: query graph has " + std::to_string(h.order()) +
                              " vertices, ceiling is " + std::to_string(limits.max_query_vertices));
    if (h.order() == 0) return MinorModel{};
    if (h.order() > g.order() || h.size() > g.size()) return std::nullopt;
    MinorSearch search(g, h);
    return search.run(g);
}

std::optional<std::vector<Vertex>> find_induced_subgraph(const Graph& g, const Graph& h, const OracleLimits& limits) {
    enforce_bitset(g, limits, "find_induced_subgraph");
    if (h.order() > limits.max_query_vertices && h.order() > limits.max_vertices)
        throw CeilingExceeded("find_induced_subgraph: query graph too large");
    if (h.order() > g.order()) return std::nullopt;
    auto adj = adjacency_masks(g);
    auto hadj = adjacency_masks(h);
    const int k = h.order();

    std::vector<Vertex> order;
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    while (static_cast<int>(order.size()) < k) {
        Vertex start = -1;
        for (Vertex x = 0; x < k; ++x)
            if (!placed[static_cast<std::size_t>(x)] && (start < 0 || h.degree(x) > h.degree(start))) start = x;
        placed[static_cast<std::size_t>(start)] = 1;
        std::size_t head = order.size();
        order.push_back(start);
        while (head < order.size()) {
            Vertex x = order[head++];
            // Prefer high-degree neighbours first.
            std::vector<Vertex> nb(h.neighbors(x).begin(), h.neighbors(x).end());
            std::stable_sort(nb.begin(), nb.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
            for (Vertex y : nb)
                if (!placed[static_cast<std::size_t>(y)]) {
                    placed[static_cast<std::size_t>(y)] = 1;
                    order.push_back(y);
                }
        }
    }

    std::vector<Vertex> image(static_cast<std::size_t>(k), -1);
    std::function<bool(std::size_t, Mask)> go = [&](std::size_t i, Mask used) -> bool {
        if (i == order.size()) return true;
        Vertex x = order[i];
        Mask cand = full_mask(g.order()) & ~used;
        for (std::size_t j = 0; j < i; ++j) {
            Vertex y = order[j];
            Mask ay = adj[static_cast<std::size_t>(image[static_cast<std::size_t>(y)])];
            cand &= (hadj[static_cast<std::size_t>(x)] & bit(y)) ? ay : ~ay;
        }
        const int need = h.degree(x);
        while (cand) {
            Vertex v = lowest(cand);
            cand &= cand - 1;
            if (popcount(adj[static_cast<std::size_t>(v)]) < need) continue;
            image[static_cast<std::size_t>(x)] = v;
            if (go(i + 1, used | bit(v))) return true;
        }
        image[static_cast<std::size_t>(x)] = -1;
        return false;
    };
    if (!go(0, 0)) return std::nullopt;
    return image;
}

VertexSet max_independent_set(const Graph& g, const OracleLimits& limits) {
    enforce_bitset(g, limits, "max_independent_set");
    auto adj = adjacency_masks(g);
    return from_mask(mis_mask(adj, full_mask(g.order())));
}

std::vector<Edge> max_induced_matching(const Graph& g, const OracleLimits& limits) {
    enforce_bitset(g, limits, "max_induced_matching");
    auto adj = adjacency_masks(g);
    std::vector<Edge> best, current;
    std::function<void(Mask)> go = [&](Mask avail) {
        // Drop vertices with no available neighbour; they can never be matched.
        Mask live = 0;
        for_each_bit(avail, [&](int v) {
            if (adj[static_cast<std::size_t>(v)] & avail) live |= bit(v);
        });
        if (current.size() > best.size()) best = current;
        if (current.size() + static_cast<std::size_t>(popcount(live)) / 2 <= best.size()) return;
        if (!live) return;
        Vertex v = lowest(live);
        Mask nb = adj[static_cast<std::size_t>(v)] & live;
        for_each_bit(nb, [&](int u) {
            current.push_back({v, u});
            go(live & ~bit(v) & ~bit(u) & ~adj[static_cast<std::size_t>(v)] & ~adj[static_cast<std::size_t>(u)]);
            current.pop_back();
        });
        go(live & ~bit(v));
    };
    go(full_mask(g.order()));
    return best;
}

std::optional<std::vector<Vertex>> hamiltonian_st_path(const Graph& g, Vertex s, Vertex t,
                                                       const OracleLimits& limits) {
    enforce_bitset(g, limits, "hamiltonian_st_path");
    if (s < 0 || t < 0 || s >= g.order() || t >= g.order()) throw RangeError("hamiltonian_st_path: bad endpoint");
    if (s == t) {
        if (g.order() == 1) return std::vector<Vertex>{s};
        return std::nullopt;
    }
    return hamiltonian_path(g, s, t);
}

namespace {

void check_bipartition(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.size() + b.size() != static_cast<std::size_t>(g.order()) || !set_intersection(a, b).empty())
        throw InputError("sides do not partition the vertex set");
    for (Vertex v : set_union(a, b))
        if (v < 0 || v >= g.order()) throw InputError("side contains an invalid vertex");
    if (!is_independent(g, a) || !is_independent(g, b)) throw InputError("graph is not bipartite with the given sides");
}

}  // namespace

std::optional<Biclique> bipartite_biclique(const Graph& g, const VertexSet& a, const VertexSet& b, int k,
                                           const OracleLimits& limits) {
    enforce_bitset(g, limits, "bipartite_biclique");
    check_bipartition(g, a, b);
    if (k <= 0) return Biclique{};
    if (static_cast<std::size_t>(k) > a.size() || static_cast<std::size_t>(k) > b.size()) return std::nullopt;
    auto adj = adjacency_masks(g);
    Mask bmask = to_mask(b);
    std::vector<Vertex> chosen;
    std::optional<Biclique> out;
    std::function<bool(std::size_t, Mask)> go = [&](std::size_t from, Mask common) -> bool {
        if (popcount(common) < k) return false;
        if (static_cast<int>(chosen.size()) == k) {
            Mask right = 0;
            Mask c = common;
            for (int i = 0; i < k; ++i) {
                right |= bit(lowest(c));
                c &= c - 1;
            }
            out = Biclique{VertexSet(chosen), from_mask(right)};
            return true;
        }
        for (std::size_t i = from; i < a.size(); ++i) {
            chosen.push_back(a[i]);
            if (go(i + 1, common & adj[static_cast<std::size_t>(a[i])])) return true;
            chosen.pop_back();
        }
        return false;
    };
    go(0, bmask);
    return out;
}

std::optional<Biclique> find_induced_biclique(const Graph& g, int s, int t, const OracleLimits& limits) {
    enforce_bitset(g, limits, "find_induced_biclique");
    if (s < 0 || t < 0) return std::nullopt;
    if (s + t > g.order()) return std::nullopt;
    auto adj = adjacency_masks(g);
    const int small = std::min(s, t), large = std::max(s, t);
    std::vector<Vertex> chosen;
    std::optional<Biclique> out;
    std::function<bool(Mask, Mask)> go = [&](Mask cand, Mask common) -> bool {
        if (popcount(common) < large) return false;
        if (static_cast<int>(chosen.size()) == small) {
            Mask other = mis_mask(adj, common);
            if (popcount(other) < large) return false;
            Mask pick = 0;
            for (int i = 0; i < large; ++i) {
                pick |= bit(lowest(other));
                other &= other - 1;
            }
            VertexSet side(chosen);
            VertexSet rest = from_mask(pick);
            out = small == s ? Biclique{side, rest} : Biclique{rest, side};
            return true;
        }
        while (cand) {
            Vertex v = lowest(cand);
            cand &= cand - 1;
            chosen.push_back(v);
            if (go(cand & ~adj[static_cast<std::size_t>(v)], common & adj[static_cast<std::size_t>(v)])) return true;
            chosen.pop_back();
        }
        return false;
    };
    go(full_mask(g.order()), full_mask(g.order()));
    return out;
}

std::optional<VertexSet> perfect_code(const Graph& g, const VertexSet& terminals, const VertexSet& n_side, int k,
                                      const OracleLimits& limits) {
    enforce_bitset(g, limits, "perfect_code");
    check_bipartition(g, terminals, n_side);
    auto adj = adjacency_masks(g);
    const Mask all_terminals = to_mask(terminals);
    std::vector<Vertex> chosen;
    std::function<bool(Mask)> go = [&](Mask covered) -> bool {
        if (covered == all_terminals) return true;
        if (static_cast<int>(chosen.size()) >= k) return false;
        // Branch on the uncovered terminal with the fewest usable code vertices.
        Vertex pick = -1;
        Mask pick_options = 0;
        int fewest = 65;
        for_each_bit(all_terminals & ~covered, [&](int tau) {
            Mask options = 0;
            for_each_bit(adj[static_cast<std::size_t>(tau)], [&](int u) {
                if (!(adj[static_cast<std::size_t>(u)] & covered)) options |= bit(u);
            });
            if (popcount(options) < fewest) {
                fewest = popcount(options);
                pick = tau;
                pick_options = options;
            }
        });
        if (pick < 0 || fewest == 0) return false;
        while (pick_options) {
            Vertex u = lowest(pick_options);
            pick_options &= pick_options - 1;
            chosen.push_back(u);
            if (go(covered | adj[static_cast<std::size_t>(u)])) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return VertexSet(chosen);
}

std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, int k, const OracleLimits& limits) {
    enforce_ceiling(g, limits, "find_induced_path");
    const int n = g.order();
    if (k <= 0) return std::vector<Vertex>{};
    if (k > n) return std::nullopt;
    std::vector<int> cnt(static_cast<std::size_t>(n), 0);
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> path;
    std::vector<int> stamp(static_cast<std::size_t>(n), 0);
    int epoch = 0;
    std::vector<Vertex> queue;

    auto add = [&](Vertex v) {
        on[static_cast<std::size_t>(v)] = 1;
        path.push_back(v);
        for (Vertex w : g.neighbors(v)) ++cnt[static_cast<std::size_t>(w)];
    };
    auto remove = [&](Vertex v) {
        on[static_cast<std::size_t>(v)] = 0;
        path.pop_back();
        for (Vertex w : g.neighbors(v)) --cnt[static_cast<std::size_t>(w)];
    };
    // Vertices that could still extend the path: reachable from the valid next
    // steps through vertices adjacent to no path vertex.
    auto reachable = [&]() {
        ++epoch;
        queue.clear();
        Vertex last = path.back();
        for (Vertex w : g.neighbors(last))
            if (!on[static_cast<std::size_t>(w)] && cnt[static_cast<std::size_t>(w)] == 1) {
                stamp[static_cast<std::size_t>(w)] = epoch;
                queue.push_back(w);
            }
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex w : g.neighbors(queue[head]))
                if (stamp[static_cast<std::size_t>(w)] != epoch && !on[static_cast<std::size_t>(w)] &&
                    cnt[static_cast<std::size_t>(w)] == 0) {
                    stamp[static_cast<std::size_t>(w)] = epoch;
                    queue.push_back(w);
                }
        return static_cast<int>(queue.size());
    };

    std::function<bool()> go = [&]() -> bool {
        if (static_cast<int>(path.size()) >= k) return true;
        if (static_cast<int>(path.size()) + reachable() < k) return false;
        Vertex last = path.back();
        for (Vertex w : g.neighbors(last)) {
            if (on[static_cast<std::size_t>(w)] || cnt[static_cast<std::size_t>(w)] != 1) continue;
            add(w);
            if (go()) return true;
            remove(w);
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        add(s);
        if (go()) return path;
        remove(s);
    }
    return std::nullopt;
}

bool is_induced_path(const Graph& g, const std::vector<Vertex>& path) {
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < path.size(); ++i) {
        Vertex v = path[i];
        if (v < 0 || v >= g.order() || pos[static_cast<std::size_t>(v)] >= 0) return false;
        pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
        int inside = 0;
        for (Vertex w : g.neighbors(path[i])) {
            int j = pos[static_cast<std::size_t>(w)];
            if (j < 0) continue;
            if (j != static_cast<int>(i) - 1 && j != static_cast<int>(i) + 1) return false;
            ++inside;
        }
        int expected = (i > 0 ? 1 : 0) + (i + 1 < path.size() ? 1 : 0);
        if (inside != expected) return false;
    }
    return true;
}

bool is_induced_matching(const Graph& g, const std::vector<Edge>& matching) {
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < matching.size(); ++i) {
        auto e = matching[i];
        if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) return false;
        for (Vertex v : {e.u, e.v}) {
            if (owner[static_cast<std::size_t>(v)] >= 0) return false;
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    for (std::size_t i = 0; i < matching.size(); ++i)
        for (Vertex v : {matching[i].u, matching[i].v})
            for (Vertex w : g.neighbors(v)) {
                int o = owner[static_cast<std::size_t>(w)];
                if (o >= 0 && o != static_cast<int>(i)) return false;
            }
    return true;
}

}  // namespace vck
