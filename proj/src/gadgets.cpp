#include "vck/gadgets.hpp"

#include <limits>

#include "vck/combinations.hpp"

namespace vck {

namespace {

void check_sides(const BipartiteInput& in, const char* what) {
    const Graph& g = in.graph;
    for (Vertex v : set_union(in.a, in.b))
        if (v < 0 || v >= g.order()) throw InputError(std::string(what) + ": side contains an invalid vertex");
    if (in.a.size() + in.b.size() != static_cast<std::size_t>(g.order()) || !set_intersection(in.a, in.b).empty())
        throw InputError(std::string(what) + ": sides do not partition the vertex set");
    if (!is_independent(g, in.a) || !is_independent(g, in.b))
        throw InputError(std::string(what) + ": graph is not bipartite with the given sides");
    if (in.k < 1) throw InputError(std::string(what) + ": k must be at least 1");
}

void check_bipartite_class(const std::vector<BipartiteInput>& inputs, const char* what) {
    if (inputs.empty()) throw InputError(std::string(what) + ": no inputs");
    for (const auto& in : inputs) {
        check_sides(in, what);
        const auto& f = inputs.front();
        if (in.a.size() != f.a.size() || in.b.size() != f.b.size() || in.k != f.k)
            throw ClassError(std::string(what) + ": inputs differ in |A|, |B| or k");
    }
}

// Lays out B* first, then one block per input for A_i. Returns the first free id.
int embed_bipartite(const std::vector<BipartiteInput>& inputs, std::vector<std::vector<Vertex>>& embed) {
    const int n = static_cast<int>(inputs.front().b.size());
    int next = n;
    embed.clear();
    for (const auto& in : inputs) {
        std::vector<Vertex> map(static_cast<std::size_t>(in.graph.order()), -1);
        for (std::size_t j = 0; j < in.b.size(); ++j) map[static_cast<std::size_t>(in.b[j])] = static_cast<Vertex>(j);
        for (Vertex v : in.a) map[static_cast<std::size_t>(v)] = next++;
        embed.push_back(std::move(map));
    }
    return next;
}

void add_input_edges(GraphBuilder& b, const std::vector<BipartiteInput>& inputs,
                     const std::vector<std::vector<Vertex>>& embed) {
    for (std::size_t i = 0; i < inputs.size(); ++i)
        for (auto e : inputs[i].graph.edges())
            b.add_edge(embed[i][static_cast<std::size_t>(e.u)], embed[i][static_cast<std::size_t>(e.v)]);
}

std::vector<Vertex> fresh(GraphBuilder& b, int count) {
    std::vector<Vertex> out;
    for (int i = 0; i < count; ++i) out.push_back(b.add_vertex());
    return out;
}

}  // namespace

int log2_exact(std::size_t r) {
    if (r == 0 || (r & (r - 1)) != 0) throw RangeError("log2_exact: not a power of two");
    int l = 0;
    while ((std::size_t{1} << l) < r) ++l;
    return l;
}

bool selector_bit(std::size_t i, std::size_t r, int j) {
    return (((i + 1) % r) >> j) & 1;
}

BicliqueComposition compose_biclique(const std::vector<BipartiteInput>& raw) {
    check_bipartite_class(raw, "compose_biclique");
    auto inputs = pad_to_power_of_two(raw);
    const std::size_t r = inputs.size();
    const int log_r = log2_exact(r);
    const int n = static_cast<int>(inputs.front().b.size());
    const int k = inputs.front().k;

    BicliqueComposition out;
    out.inputs = r;
    GraphBuilder b(embed_bipartite(inputs, out.embed));
    add_input_edges(b, inputs, out.embed);
    for (int j = 0; j < log_r; ++j) {
        out.p.push_back(fresh(b, n + 1));
        out.q.push_back(fresh(b, n + 1));
        b.add_biclique(out.p.back(), out.q.back());
        for (std::size_t i = 0; i < r; ++i) {
            const auto& side = selector_bit(i, r, j) ? out.p.back() : out.q.back();
            for (Vertex a : inputs[i].a) b.add_biclique(side, std::vector<Vertex>{out.embed[i][static_cast<std::size_t>(a)]});
        }
    }
    out.d = fresh(b, (n + 1) * (1 + 2 * log_r));
    std::vector<Vertex> cover;
    for (Vertex v = 0; v < n; ++v) cover.push_back(v);
    for (int j = 0; j < log_r; ++j) {
        cover.insert(cover.end(), out.p[static_cast<std::size_t>(j)].begin(), out.p[static_cast<std::size_t>(j)].end());
        cover.insert(cover.end(), out.q[static_cast<std::size_t>(j)].begin(), out.q[static_cast<std::size_t>(j)].end());
    }
    b.add_biclique(out.d, cover);

    Instance& inst = out.instance;
    inst.problem = Problem::biclique_induced;
    inst.graph = b.build();
    inst.cover = VertexSet(cover);
    inst.targets["s"] = k + (n + 1) * log_r;
    inst.targets["t"] = k + (n + 1) * (1 + 2 * log_r);
    return out;
}

Biclique biclique_witness(const BicliqueComposition& c, std::size_t i, const Biclique& w) {
    if (i >= c.inputs) throw RangeError("biclique_witness: no such input");
    std::vector<Vertex> left, right(c.d.begin(), c.d.end());
    for (Vertex v : w.right) left.push_back(c.embed[i][static_cast<std::size_t>(v)]);
    for (std::size_t j = 0; j < c.p.size(); ++j) {
        const auto& side = selector_bit(i, c.inputs, static_cast<int>(j)) ? c.p[j] : c.q[j];
        left.insert(left.end(), side.begin(), side.end());
    }
    for (Vertex v : w.left) right.push_back(c.embed[i][static_cast<std::size_t>(v)]);
    return Biclique{VertexSet(left), VertexSet(right)};
}

int induced_path_min_length(int n) {
    // Seven pieces of an induced path in the gadget, each on at most
    // 2 * vc + 1 vertices with vc = n + C(n, 2), must stay below L - 3.
    return 7 * (n * n + n + 1) + 4;
}

PathComposition compose_induced_path(const std::vector<HamInput>& raw, std::optional<int> path_length) {
    if (raw.empty()) throw InputError("compose_induced_path: no inputs");
    const int n = raw.front().graph.order();
    for (const auto& in : raw) {
        if (in.graph.order() != n) throw ClassError("compose_induced_path: inputs differ in vertex count");
        if (in.s < 0 || in.t < 0 || in.s >= n || in.t >= n || in.s == in.t)
            throw InputError("compose_induced_path: s and t must be distinct vertices");
    }
    PathComposition out;
    out.n = n;
    if (!path_length && n < 9) {
        bool any = false;
        for (const auto& in : raw) any = any || hamiltonian_st_path(in.graph, in.s, in.t).has_value();
        out.canonical = true;
        out.inputs = raw.size();
        out.instance.problem = Problem::induced_path;
        out.instance.graph = Graph(1);
        out.instance.cover = VertexSet{};
        out.instance.targets["k"] = any ? 1 : 2;
        return out;
    }
    int len;
    if (path_length) {
        len = *path_length;
        if (len < induced_path_min_length(n))
            throw RangeError("compose_induced_path: path length " + std::to_string(len) + " is below " +
                             std::to_string(induced_path_min_length(n)) + " for n = " + std::to_string(n));
    } else {
        if (n > 1000) throw RangeError("compose_induced_path: n^3 paths are too long");
        len = n * n * n;
    }

    auto inputs = pad_to_power_of_two(raw);
    const std::size_t r = inputs.size();
    out.inputs = r;
    out.path_length = len;
    GraphBuilder b;
    for (auto* path : {&out.path_a, &out.path_b, &out.path_c}) {
        *path = fresh(b, len);
        for (int i = 0; i + 1 < len; ++i) b.add_edge((*path)[static_cast<std::size_t>(i)], (*path)[static_cast<std::size_t>(i + 1)]);
    }
    out.v_star = fresh(b, n);
    out.e.assign(static_cast<std::size_t>(n), std::vector<Vertex>(static_cast<std::size_t>(n), -1));
    for (int j = 0; j < n; ++j)
        for (int h = j + 1; h < n; ++h) {
            Vertex e = b.add_vertex();
            out.e[static_cast<std::size_t>(j)][static_cast<std::size_t>(h)] = e;
            out.e[static_cast<std::size_t>(h)][static_cast<std::size_t>(j)] = e;
            b.add_edge(e, out.v_star[static_cast<std::size_t>(j)]);
            b.add_edge(e, out.v_star[static_cast<std::size_t>(h)]);
        }
    for (const auto& in : inputs) {
        std::vector<int> label(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> by_label(static_cast<std::size_t>(n));
        label[static_cast<std::size_t>(in.s)] = 0;
        label[static_cast<std::size_t>(in.t)] = n - 1;
        int next = 1;
        for (Vertex v = 0; v < n; ++v)
            if (label[static_cast<std::size_t>(v)] < 0) label[static_cast<std::size_t>(v)] = next++;
        for (Vertex v = 0; v < n; ++v) by_label[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = v;
        Vertex z = b.add_vertex();
        out.z.push_back(z);
        for (int j = 0; j < n; ++j)
            for (int h = j + 1; h < n; ++h)
                if (!in.graph.adjacent(by_label[static_cast<std::size_t>(j)], by_label[static_cast<std::size_t>(h)]))
                    b.add_edge(z, out.e[static_cast<std::size_t>(j)][static_cast<std::size_t>(h)]);
        b.add_edge(z, out.path_a.back());
        b.add_edge(z, out.path_b.back());
        out.label.push_back(std::move(label));
    }
    b.add_edge(out.path_b.front(), out.v_star.front());
    b.add_edge(out.path_c.front(), out.v_star.back());

    Instance& inst = out.instance;
    inst.problem = Problem::induced_path;
    inst.graph = b.build();
    inst.cover = set_difference(all_vertices(inst.graph), VertexSet(out.z));
    inst.targets["k"] = 3LL * len + 2LL * n;
    return out;
}

std::vector<Vertex> induced_path_witness(const PathComposition& c, std::size_t i, const std::vector<Vertex>& ham) {
    if (c.canonical) throw PreconditionError("induced_path_witness: the composition was decided directly");
    if (i >= c.inputs) throw RangeError("induced_path_witness: no such input");
    const auto& label = c.label[i];
    if (ham.size() != static_cast<std::size_t>(c.n) || label[static_cast<std::size_t>(ham.front())] != 0 ||
        label[static_cast<std::size_t>(ham.back())] != c.n - 1)
        throw PreconditionError("induced_path_witness: not a Hamiltonian s-t path");
    std::vector<Vertex> out(c.path_a.begin(), c.path_a.end());
    out.push_back(c.z[i]);
    out.insert(out.end(), c.path_b.rbegin(), c.path_b.rend());
    for (std::size_t p = 0; p < ham.size(); ++p) {
        const auto j = static_cast<std::size_t>(label[static_cast<std::size_t>(ham[p])]);
        if (p > 0) {
            const auto h = static_cast<std::size_t>(label[static_cast<std::size_t>(ham[p - 1])]);
            out.push_back(c.e[h][j]);
        }
        out.push_back(c.v_star[j]);
    }
    out.insert(out.end(), c.path_c.begin(), c.path_c.end());
    return out;
}

MatchingComposition compose_induced_matching(const std::vector<BipartiteInput>& raw) {
    check_bipartite_class(raw, "compose_induced_matching");
    auto inputs = pad_to_power_of_two(raw);
    const std::size_t r = inputs.size();
    const int log_r = log2_exact(r);
    const int n = static_cast<int>(inputs.front().b.size());

    MatchingComposition out;
    out.inputs = r;
    GraphBuilder b(embed_bipartite(inputs, out.embed));
    add_input_edges(b, inputs, out.embed);
    std::vector<Vertex> cover;
    for (Vertex v = 0; v < n; ++v) cover.push_back(v);
    for (int j = 0; j < log_r; ++j) {
        out.triples.emplace_back();
        for (int s = 0; s < n; ++s) {
            std::array<Vertex, 3> t{b.add_vertex(), b.add_vertex(), b.add_vertex()};
            b.add_clique(t);
            cover.insert(cover.end(), t.begin(), t.end());
            for (std::size_t i = 0; i < r; ++i) {
                Vertex hub = selector_bit(i, r, j) ? t[0] : t[1];
                for (Vertex a : inputs[i].a) b.add_edge(hub, out.embed[i][static_cast<std::size_t>(a)]);
            }
            out.triples.back().push_back(t);
        }
    }
    Instance& inst = out.instance;
    inst.problem = Problem::induced_matching;
    inst.graph = b.build();
    inst.cover = VertexSet(cover);
    inst.targets["k"] = inputs.front().k + static_cast<long long>(n) * log_r;
    return out;
}

std::vector<Edge> induced_matching_witness(const MatchingComposition& c, std::size_t i, const std::vector<Edge>& m) {
    if (i >= c.inputs) throw RangeError("induced_matching_witness: no such input");
    std::vector<Edge> out;
    for (auto e : m) {
        Vertex u = c.embed[i][static_cast<std::size_t>(e.u)], v = c.embed[i][static_cast<std::size_t>(e.v)];
        out.push_back({std::min(u, v), std::max(u, v)});
    }
    for (std::size_t j = 0; j < c.triples.size(); ++j)
        for (const auto& t : c.triples[j]) {
            // The hub that is not joined to A_i.
            Vertex hub = selector_bit(i, c.inputs, static_cast<int>(j)) ? t[1] : t[0];
            out.push_back({std::min(hub, t[2]), std::max(hub, t[2])});
        }
    return out;
}

PsiGraph make_psi(int s, int t) {
    if (s < 0 || t < 0) throw RangeError("make_psi: negative pendant count");
    GraphBuilder b(11 + s + t);
    b.add_clique(std::vector<Vertex>{0, 1, 2, 3, 4});
    b.add_clique(std::vector<Vertex>{5, 6, 7, 8});
    for (Vertex v = 0; v < 5; ++v) b.add_edge(9, v);
    for (Vertex v = 5; v < 9; ++v) b.add_edge(10, v);
    b.add_edge(9, 10);
    for (int i = 0; i < s; ++i) b.add_edge(9, 11 + i);
    for (int i = 0; i < t; ++i) b.add_edge(10, 11 + s + i);
    std::vector<Vertex> cover;
    for (Vertex v = 0; v < 11; ++v) cover.push_back(v);
    return PsiGraph{b.build(), VertexSet(cover)};
}

PsiComposition compose_psi(const std::vector<SplitInput>& raw) {
    if (raw.empty()) throw InputError("compose_psi: no inputs");
    for (const auto& in : raw) {
        const Graph& g = in.graph;
        for (Vertex v : in.y)
            if (v < 0 || v >= g.order()) throw InputError("compose_psi: Y contains an invalid vertex");
        if (!is_independent(g, in.y)) throw InputError("compose_psi: Y is not independent");
        for (Vertex v = 0; v < g.order(); ++v) {
            if (in.y.contains(v)) continue;
            int partners = 0;
            for (Vertex w : g.neighbors(v)) partners += in.y.contains(w) ? 0 : 1;
            if (partners != 1) throw InputError("compose_psi: G - Y is not a disjoint union of P2 components");
        }
        if (in.k < 0) throw InputError("compose_psi: negative k");
        const auto& f = raw.front();
        if (g.order() != f.graph.order() || in.y.size() != f.y.size() || in.k != f.k)
            throw ClassError("compose_psi: inputs differ in n, |Y| or k");
    }
    auto inputs = pad_to_power_of_two(raw);
    const std::size_t r = inputs.size();
    const int log_r = log2_exact(r);
    const int pairs = static_cast<int>(inputs.front().graph.order() - inputs.front().y.size()) / 2;

    PsiComposition out;
    out.inputs = r;
    // D* = {a*_j = 2j, b*_j = 2j + 1}, then one block per input for Y_i.
    int next = 2 * pairs;
    for (const auto& in : inputs) {
        std::vector<Vertex> map(static_cast<std::size_t>(in.graph.order()), -1);
        int pair = 0;
        for (Vertex v = 0; v < in.graph.order(); ++v) {
            if (in.y.contains(v) || map[static_cast<std::size_t>(v)] >= 0) continue;
            for (Vertex w : in.graph.neighbors(v))
                if (!in.y.contains(w)) map[static_cast<std::size_t>(w)] = 2 * pair + 1;
            map[static_cast<std::size_t>(v)] = 2 * pair++;
        }
        for (Vertex v : in.y) map[static_cast<std::size_t>(v)] = next++;
        out.embed.push_back(std::move(map));
    }
    GraphBuilder b(next);
    for (std::size_t i = 0; i < r; ++i)
        for (auto e : inputs[i].graph.edges())
            b.add_edge(out.embed[i][static_cast<std::size_t>(e.u)], out.embed[i][static_cast<std::size_t>(e.v)]);
    for (int j = 0; j < log_r; ++j) {
        std::array<Vertex, 2> sel{b.add_vertex(), b.add_vertex()};
        b.add_edge(sel[0], sel[1]);
        for (std::size_t i = 0; i < r; ++i) {
            Vertex hub = sel[selector_bit(i, r, j) ? 1 : 0];
            for (Vertex y : inputs[i].y) b.add_edge(hub, out.embed[i][static_cast<std::size_t>(y)]);
        }
        out.selectors.push_back(sel);
    }
    out.c1 = fresh(b, 5);
    out.c2 = fresh(b, 4);
    b.add_clique(out.c1);
    b.add_clique(out.c2);
    out.z1 = b.add_vertex();
    out.z2 = b.add_vertex();
    b.add_edge(out.z1, out.z2);
    for (Vertex v : out.c1) b.add_edge(out.z1, v);
    for (Vertex v : out.c2) b.add_edge(out.z2, v);
    for (Vertex v = 0; v < next; ++v) b.add_edge(out.z1, v);  // D* and every Y_i
    for (const auto& sel : out.selectors) {
        b.add_edge(out.z2, sel[0]);
        b.add_edge(out.z2, sel[1]);
    }

    std::vector<Vertex> cover;
    for (Vertex v = 0; v < 2 * pairs; ++v) cover.push_back(v);
    for (const auto& sel : out.selectors) cover.insert(cover.end(), sel.begin(), sel.end());
    cover.insert(cover.end(), out.c1.begin(), out.c1.end());
    cover.insert(cover.end(), out.c2.begin(), out.c2.end());
    cover.push_back(out.z1);
    cover.push_back(out.z2);

    Instance& inst = out.instance;
    inst.problem = Problem::psi_test;
    inst.graph = b.build();
    inst.cover = VertexSet(cover);
    inst.targets["s"] = inputs.front().k;
    inst.targets["t"] = log_r;
    return out;
}

std::vector<Vertex> psi_witness(const PsiComposition& c, std::size_t i, const VertexSet& independent) {
    if (i >= c.inputs) throw RangeError("psi_witness: no such input");
    std::vector<Vertex> image(c.c1.begin(), c.c1.end());
    image.insert(image.end(), c.c2.begin(), c.c2.end());
    image.push_back(c.z1);
    image.push_back(c.z2);
    for (Vertex v : independent) image.push_back(c.embed[i][static_cast<std::size_t>(v)]);
    for (std::size_t j = 0; j < c.selectors.size(); ++j)
        image.push_back(c.selectors[j][selector_bit(i, c.inputs, static_cast<int>(j)) ? 0 : 1]);
    return image;
}

MinorTransform perfect_code_to_minor(const Graph& g, const VertexSet& terminals, const VertexSet& n_side, int k) {
    for (Vertex v : set_union(terminals, n_side))
        if (v < 0 || v >= g.order()) throw InputError("perfect_code_to_minor: side contains an invalid vertex");
    if (terminals.size() + n_side.size() != static_cast<std::size_t>(g.order()) ||
        !set_intersection(terminals, n_side).empty())
        throw InputError("perfect_code_to_minor: sides do not partition the vertex set");
    if (!is_independent(g, terminals) || !is_independent(g, n_side))
        throw InputError("perfect_code_to_minor: graph is not bipartite with the given sides");
    for (Vertex v : n_side)
        if (g.degree(v) != g.degree(n_side[0])) throw InputError("perfect_code_to_minor: N side is not regular");

    MinorTransform out;
    const int t = static_cast<int>(terminals.size());
    if (t == 0) {
        out.verdict = k >= 0;
        return out;
    }
    const int r = n_side.empty() ? 0 : g.degree(n_side[0]);
    if (r == 0 || t % r != 0 || k < t / r) {
        out.verdict = false;
        return out;
    }
    const int code = t / r;
    out.code_size = code;
    if (r >= t - 1) {
        // At most two code vertices: try them all.
        out.verdict = any_combination(n_side.items(), static_cast<std::size_t>(code), [&](const std::vector<Vertex>& pick) {
            for (Vertex tau : terminals) {
                int hits = 0;
                for (Vertex u : pick) hits += g.adjacent(u, tau) ? 1 : 0;
                if (hits != 1) return false;
            }
            return true;
        });
        return out;
    }

    GraphBuilder host(g);
    host.add_clique(terminals.items());
    GraphBuilder query(code * r + code);
    std::vector<Vertex> clique;
    for (Vertex v = 0; v < code * r; ++v) clique.push_back(v);
    query.add_clique(clique);
    for (int i = 0; i < code; ++i)
        for (int j = 0; j < r; ++j) query.add_edge(code * r + i, i * r + j);

    Instance& inst = out.instance;
    inst.problem = Problem::minor_test;
    inst.graph = host.build();
    inst.cover = terminals;
    inst.query = query.build();
    return out;
}

Instance is_to_biclique_instance(const Graph& g, int k, int c) {
    if (c < 1) throw PreconditionError("is_to_biclique_instance: c must be at least 1");
    if (k < 0) throw InputError("is_to_biclique_instance: negative k");
    const int n = g.order();
    const int pad = 2 * n + 2 * c;
    GraphBuilder b(g);
    std::vector<Vertex> a = fresh(b, pad), side_b = fresh(b, pad);
    std::vector<Vertex> joined = a;
    for (Vertex v = 0; v < n; ++v) joined.push_back(v);
    b.add_biclique(side_b, joined);

    Instance inst;
    inst.problem = Problem::biclique_induced;
    inst.graph = b.build();
    std::vector<Vertex> cover = side_b;
    for (Vertex v = 0; v < n; ++v) cover.push_back(v);
    inst.cover = VertexSet(cover);
    inst.targets["s"] = c;
    inst.targets["t"] = static_cast<long long>(k) + pad;
    return inst;
}

}  // namespace vck
