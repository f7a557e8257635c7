#include "checks.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "support.hpp"
#include "vck/combinations.hpp"
#include "vck/errors.hpp"
#include "vck/gadgets.hpp"
#include "vck/kernels.hpp"
#include "vck/named_graphs.hpp"
#include "vck/oracles.hpp"
#include "vck/properties.hpp"
#include "vck/random.hpp"
#include "vck/reduce.hpp"

namespace checks {

using namespace vck;

namespace {

std::string describe_set(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

VertexSet random_subset(const std::vector<Vertex>& pool, double p, Rng& rng) {
    std::vector<Vertex> out;
    for (Vertex v : pool)
        if (rng.coin(p)) out.push_back(v);
    return VertexSet(out);
}

Graph with_edge(const Graph& g, Vertex u, Vertex v) {
    GraphBuilder b(g);
    b.add_edge(u, v);
    return b.build();
}

int common_outside(const Graph& g, const VertexSet& x, Vertex u, Vertex v) {
    int n = 0;
    for (Vertex w : g.neighbors(u))
        if (!x.contains(w) && g.adjacent(w, v)) ++n;
    return n;
}

}  // namespace

// ---------------------------------------------------------------------------

Tally preservation_trials(int trials, std::uint64_t seed) {
    static const char* kProps[] = {"k2",        "odd-cycle",         "chordless-cycle", "f-minor:K3",
                                   "hamiltonian-cycle", "hamiltonian-path", "packing:K2",      "packing:P3",
                                   "contains-cycle"};
    std::vector<PropertySpec> props;
    for (const char* name : kProps) props.push_back(parse_property(name));

    Tally t;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        const PropertySpec& p = props[static_cast<std::size_t>(trial) % props.size()];
        // Draw until the graph has a witness outside S.
        bool drawn = false;
        for (int attempt = 0; attempt < 200 && !drawn; ++attempt) {
            const int n = rng.uniform(6, 16);
            const int x = rng.uniform(1, std::min(3, n - 1));
            static constexpr double kDensity[] = {0.3, 0.5, 0.8};
            auto planted = planted_cover_graph(n, x, kDensity[rng.uniform(0, 2)], rng);
            const Graph& g = planted.graph;
            const VertexSet all = all_vertices(g);
            VertexSet s;
            for (int i = rng.uniform(0, 2); i > 0; --i) s.insert(rng.uniform(0, n - 1));
            const auto pool = set_difference(all, s).items();

            // A random region R outside S, shuffled so the witness found inside
            // it is not biased towards low ids (which reduce marks first).
            std::optional<VertexSet> witness;
            for (int r = 0; r < 20 && !witness; ++r) {
                auto region = random_subset(pool, r < 10 ? 0.6 : 1.0, rng).items();
                std::shuffle(region.begin(), region.end(), rng.engine());
                GraphBuilder b(static_cast<int>(region.size()));
                for (std::size_t i = 0; i < region.size(); ++i)
                    for (std::size_t j = i + 1; j < region.size(); ++j)
                        if (g.adjacent(region[i], region[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
                const Graph h = b.build();
                if (auto w = rng.coin(0.5) ? p.min_witness(h) : p.find_witness(h)) {
                    std::vector<Vertex> back;
                    for (Vertex v : *w) back.push_back(region[static_cast<std::size_t>(v)]);
                    witness = VertexSet(back);
                }
            }
            if (!witness) continue;
            drawn = true;
            const VertexSet& pw = *witness;
            if (!p.member(induced_subgraph(g, pw).graph)) {
                t.fail(p.name + ": find_witness returned a non-member");
                break;
            }

            const long long ell = static_cast<long long>(s.size() + pw.size()) + (rng.coin(0.25) ? 1 : 0);
            auto red = reduce(g, planted.cover, ell, p.c_pi);
            const VertexSet& kept = red.report.kept;
            ++t.trials;
            if (set_difference(pw, kept).empty()) break;
            ++t.interesting;
            std::vector<Vertex> candidates = set_difference(kept, s).items();
            bool found = any_combination(candidates, pw.size(), [&](const std::vector<Vertex>& pick) {
                return p.member(induced_subgraph(g, VertexSet(pick)).graph);
            });
            if (!found) {
                std::ostringstream os;
                os << p.name << " seed-trial " << trial << ": no replacement for P=" << describe_set(pw)
                   << " S=" << describe_set(s) << " l=" << ell;
                t.fail(os.str());
            }
        }
        if (!drawn) t.fail(p.name + ": no graph with a witness in 200 draws");
    }
    return t;
}

// ---------------------------------------------------------------------------

namespace {

const OracleLimits kMinorLimits{40, 8};

// X = {0..x-1} with u=0, w=1 non-adjacent and more than (x+1)^2 outside
// vertices adjacent to both; everything else random.
Graph rule1_instance(int x, Rng& rng) {
    const int outside = (x + 1) * (x + 1) + 1 + rng.uniform(0, 2);
    GraphBuilder b(x + outside);
    for (Vertex a = 0; a < x; ++a)
        for (Vertex c = a + 1; c < x; ++c)
            if (!(a == 0 && c == 1) && rng.coin(0.5)) b.add_edge(a, c);
    for (Vertex v = x; v < x + outside; ++v) {
        b.add_edge(0, v);
        b.add_edge(1, v);
        for (Vertex a = 2; a < x; ++a)
            if (rng.coin(0.4)) b.add_edge(a, v);
    }
    return b.build();
}

VertexSet prefix(int x) {
    std::vector<Vertex> v;
    for (Vertex i = 0; i < x; ++i) v.push_back(i);
    return VertexSet(v);
}

}  // namespace

Tally clique_rule_trials(int rule, int trials, std::uint64_t seed) {
    Tally t;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed + static_cast<std::uint64_t>(rule) * 7919, static_cast<std::uint64_t>(trial)));
        Graph g;
        VertexSet x;
        int target = 0;
        bool drawn = false;
        for (int attempt = 0; attempt < 5000 && !drawn; ++attempt) {
            if (rule == 1) {
                const int xs = rng.uniform(2, 3);
                g = rule1_instance(xs, rng);
                x = prefix(xs);
                target = rng.uniform(2, xs + 2);
                drawn = clique_fill_candidate(g, x).has_value();
            } else {
                const int n = rng.uniform(5, 13);
                const int xs = rng.uniform(1, std::min(4, n - 1));
                auto planted = planted_cover_graph(n, xs, rule == 2 ? 0.8 : 0.5, rng);
                g = std::move(planted.graph);
                x = std::move(planted.cover);
                target = rng.uniform(2, xs + 2);
                if (clique_fill_candidate(g, x)) continue;
                const bool large = clique_large_simplicial(g, x, target).has_value();
                const bool small = clique_small_simplicial(g, x, target).has_value();
                drawn = rule == 2 ? large : (!large && small);
            }
        }
        if (!drawn) {
            t.fail("rule " + std::to_string(rule) + ": could not draw a firing instance");
            continue;
        }
        ++t.trials;
        const std::string tag = "rule " + std::to_string(rule) + " trial " + std::to_string(trial) + ": ";
        const bool before = has_minor(g, complete_graph(target), kMinorLimits);
        if (rule == 1) {
            auto [u, w] = *clique_fill_candidate(g, x);
            if (!x.contains(u) || !x.contains(w) || u == w || g.adjacent(u, w)) {
                t.fail(tag + "edge outside X or already present");
                continue;
            }
            const int bound = static_cast<int>((x.size() + 1) * (x.size() + 1));
            if (common_outside(g, x, u, w) <= bound) t.fail(tag + "too few common neighbours");
            if (has_minor(with_edge(g, u, w), complete_graph(target), kMinorLimits) != before)
                t.fail(tag + "answer changed");
        } else if (rule == 2) {
            Vertex v = *clique_large_simplicial(g, x, target);
            if (x.contains(v) || !is_simplicial(g, v) || g.degree(v) < target - 1) t.fail(tag + "scope");
            if (!before) t.fail(tag + "trivial yes on a no-instance");
            if (kernel_clique_minor(g, x, target).verdict != Verdict::trivial_yes) t.fail(tag + "kernel verdict");
        } else {
            Vertex v = *clique_small_simplicial(g, x, target);
            if (x.contains(v) || !is_simplicial(g, v) || g.degree(v) >= target - 1) t.fail(tag + "scope");
            const bool after = has_minor(delete_vertices(g, VertexSet{v}).graph, complete_graph(target), kMinorLimits);
            if (after != before) t.fail(tag + "answer changed");
        }
        if (before) ++t.interesting;
    }
    return t;
}

// ---------------------------------------------------------------------------

Tally clique_bound_probes(int random_trials, std::uint64_t seed) {
    Tally t;
    // X independent, every pair of X with exactly (x+1)^2 private common
    // neighbours of degree 2. No rule applies, so the kernel keeps everything:
    // x + C(x,2)(x+1)^2 vertices, the most a reduced kernel can have.
    for (int xs = 2; xs <= 5; ++xs) {
        for (int extra = 0; extra <= 1; ++extra) {
            const int per_pair = (xs + 1) * (xs + 1);
            GraphBuilder b(xs);
            for (Vertex u = 0; u < xs; ++u)
                for (Vertex w = u + 1; w < xs; ++w)
                    for (int i = 0; i < per_pair + (u == 0 && w == 1 ? extra : 0); ++i) {
                        Vertex v = b.add_vertex();
                        b.add_edge(u, v);
                        b.add_edge(w, v);
                    }
            const Graph g = b.build();
            const VertexSet x = prefix(xs);
            for (int target = 2; target <= xs + 2; ++target) {
                ++t.trials;
                const std::string tag = "probe x=" + std::to_string(xs) + " extra=" + std::to_string(extra) +
                                        " t=" + std::to_string(target) + ": ";
                auto kr = kernel_clique_minor(g, x, target);
                if (extra == 0 && clique_fill_candidate(g, x)) t.fail(tag + "rule 1 fired at the threshold");
                if (extra == 1 && !clique_fill_candidate(g, x)) t.fail(tag + "rule 1 silent above the threshold");
                if (kr.verdict != Verdict::reduced) continue;
                const auto out = static_cast<std::uint64_t>(kr.instance->graph.order());
                if (out > clique_minor_bound(x.size())) t.fail(tag + "kernel exceeds (|X|+1)^4");
                if (extra == 0 && out != static_cast<std::uint64_t>(g.order())) t.fail(tag + "kernel shrank a stable instance");
                if (extra == 0) ++t.interesting;
            }
        }
    }
    for (int trial = 0; trial < random_trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        const int n = rng.uniform(5, 60);
        const int xs = rng.uniform(1, std::min(6, n - 1));
        auto planted = planted_cover_graph(n, xs, 0.2 + 0.6 * rng.uniform(0, 10) / 10.0, rng);
        const int target = rng.uniform(1, xs + 2);
        auto kr = kernel_clique_minor(planted.graph, planted.cover, target);
        ++t.trials;
        if (kr.verdict == Verdict::reduced &&
            static_cast<std::uint64_t>(kr.instance->graph.order()) > clique_minor_bound(planted.cover.size()))
            t.fail("random trial " + std::to_string(trial) + ": kernel exceeds (|X|+1)^4");
    }
    return t;
}

// ---------------------------------------------------------------------------

Tally combinator_tables(int max_n) {
    struct Pair {
        const char* a;
        const char* b;
        std::function<bool(const Graph&)> direct_a, direct_b;
    };
    const std::vector<Pair> pairs{
        {"odd-cycle", "chordless-cycle", testing::brute_has_odd_cycle,
         [](const Graph& g) { return testing::brute_has_hole(g); }},
        {"hamiltonian-path", "k2", testing::brute_hamiltonian_path, [](const Graph& g) { return g.size() > 0; }},
    };
    Tally t;
    for (const auto& pr : pairs) {
        const auto a = parse_property(pr.a), b = parse_property(pr.b);
        const auto u = union_props(a, b), i = intersect_props(a, b);
        const auto u_parsed = parse_property(std::string(pr.a) + "|" + pr.b);
        const auto i_parsed = parse_property(std::string(pr.a) + "&" + pr.b);
        const std::string tag = std::string(pr.a) + "/" + pr.b + ": ";
        if (u.c_pi != std::max(a.c_pi, b.c_pi) || u_parsed.c_pi != u.c_pi) t.fail(tag + "union c is not the max");
        if (i.c_pi != a.c_pi + b.c_pi || i_parsed.c_pi != i.c_pi) t.fail(tag + "intersection c is not the sum");
        for (int n = 1; n <= max_n; ++n) {
            const std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
            for (std::uint64_t code = 0; code < codes; ++code) {
                const Graph g = testing::graph_from_code(n, code);
                const bool da = pr.direct_a(g), db = pr.direct_b(g);
                ++t.trials;
                if (u.member(g) != (da || db) || u_parsed.member(g) != (da || db))
                    t.fail(tag + "union table, n=" + std::to_string(n) + " code=" + std::to_string(code));
                if (i.member(g) != (da && db) || i_parsed.member(g) != (da && db))
                    t.fail(tag + "intersection table, n=" + std::to_string(n) + " code=" + std::to_string(code));
                if (da != db) ++t.interesting;
            }
        }
    }
    return t;
}

// ---------------------------------------------------------------------------

Tally pruning_trials(int trials, std::uint64_t seed) {
    Tally t;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        Graph g, h;
        std::optional<MinorModel> model;
        while (!model) {
            g = random_graph(rng.uniform(5, 12), 0.2 + 0.1 * rng.uniform(0, 5), rng);
            h = random_graph(rng.uniform(1, 4), 0.3 + 0.1 * rng.uniform(0, 6), rng);
            model = find_minor(g, h);
        }
        // Grow branch sets with unused neighbours so pruning has work to do.
        std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0; i < model->branch_sets.size(); ++i)
            for (Vertex v : model->branch_sets[i]) owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        for (int step = rng.uniform(0, 8); step > 0; --step) {
            const auto i = static_cast<std::size_t>(rng.uniform(0, h.order() - 1));
            std::vector<Vertex> grow;
            for (Vertex v : model->branch_sets[i])
                for (Vertex w : g.neighbors(v))
                    if (owner[static_cast<std::size_t>(w)] < 0) grow.push_back(w);
            if (grow.empty()) continue;
            Vertex w = grow[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(grow.size()) - 1))];
            model->branch_sets[i].insert(w);
            owner[static_cast<std::size_t>(w)] = static_cast<int>(i);
        }
        ++t.trials;
        const std::string tag = "trial " + std::to_string(trial) + ": ";
        if (!verify_minor_model(g, h, *model)) {
            t.fail(tag + "grown model invalid (test bug)");
            continue;
        }
        auto pruned = prune_minor_model(g, h, *model);
        if (pruned.graph.order() < g.order()) ++t.interesting;
        if (!verify_minor_model(pruned.graph, h, pruned.model)) t.fail(tag + "pruned model invalid");
        if (pruned.graph.order() > 0 && pruned.graph.max_degree() > h.max_degree()) t.fail(tag + "degree bound");
        const int vc = testing::brute_vertex_cover(pruned.graph);
        if (pruned.graph.order() > h.order() + vc * (h.max_degree() + 1)) t.fail(tag + "order bound");
        for (std::size_t i = 0; i < pruned.original.size(); ++i)
            for (std::size_t j = i + 1; j < pruned.original.size(); ++j)
                if (pruned.graph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) &&
                    !g.adjacent(pruned.original[i], pruned.original[j]))
                    t.fail(tag + "pruned graph is not a subgraph");
    }
    return t;
}

// ---------------------------------------------------------------------------

namespace {

const OracleLimits kComposedLimits{64, 24};

// Source instances of one class, split by answer.
template <class In>
struct Pools {
    std::vector<In> yes, no;
};

template <class In, class Gen, class Truth>
Pools<In> make_pools(Gen gen, Truth truth, Rng& rng) {
    Pools<In> p;
    for (int i = 0; i < 4000 && (p.yes.size() < 6 || p.no.size() < 6); ++i) {
        In in = gen(rng);
        (truth(in) ? p.yes : p.no).push_back(std::move(in));
    }
    return p;
}

BipartiteInput random_bipartite(int a, int b, int k, double p, Rng& rng) {
    BipartiteInput in;
    GraphBuilder gb(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v)
            if (rng.coin(p)) gb.add_edge(u, v);
    in.graph = gb.build();
    in.a = prefix(a);
    in.b = set_difference(all_vertices(in.graph), in.a);
    in.k = k;
    return in;
}

HamInput random_ham(int n, Rng& rng) {
    HamInput in;
    in.graph = random_graph(n, 0.3 + 0.1 * rng.uniform(0, 5), rng);
    in.s = rng.uniform(0, n - 1);
    do in.t = rng.uniform(0, n - 1);
    while (in.t == in.s);
    return in;
}

// Y = {0, 1}; G - Y is the matching 2-3, 4-5; Y attaches anywhere outside.
SplitInput random_split(Rng& rng) {
    SplitInput in;
    GraphBuilder gb(6);
    gb.add_edge(2, 3);
    gb.add_edge(4, 5);
    for (Vertex y = 0; y < 2; ++y)
        for (Vertex v = 2; v < 6; ++v)
            if (rng.coin(0.5)) gb.add_edge(y, v);
    in.graph = gb.build();
    in.y = VertexSet{0, 1};
    in.k = 3;
    return in;
}

// Runs every truth vector of length r through `check(picks, expected)`.
template <class In, class Check>
void truth_vectors(const Pools<In>& pools, int repeats, int max_r, Rng& rng, Tally& t, const std::string& name,
                   Check check) {
    if (pools.yes.empty() || pools.no.empty()) {
        t.fail(name + ": could not draw both yes and no source instances");
        return;
    }
    for (int r = 1; r <= max_r; r *= 2) {
        for (int mask = 0; mask < (1 << r); ++mask) {
            for (int rep = 0; rep < repeats; ++rep) {
                std::vector<In> picks;
                for (int i = 0; i < r; ++i) {
                    const auto& pool = ((mask >> i) & 1) ? pools.yes : pools.no;
                    picks.push_back(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pool.size()) - 1))]);
                }
                ++t.trials;
                if (mask != 0) ++t.interesting;
                const std::string tag = name + " r=" + std::to_string(r) + " mask=" + std::to_string(mask) + ": ";
                try {
                    check(picks, mask != 0, tag);
                } catch (const std::exception& e) {
                    t.fail(tag + e.what());
                }
            }
        }
    }
}

void check_cover(const Instance& inst, std::size_t expected, const std::string& tag, Tally& t) {
    if (!inst.cover || !is_vertex_cover(inst.graph, *inst.cover)) t.fail(tag + "declared cover is not a vertex cover");
    else if (inst.cover->size() != expected)
        t.fail(tag + "cover size " + std::to_string(inst.cover->size()) + " != " + std::to_string(expected));
}

bool induced_biclique_ok(const Graph& g, const Biclique& b, int s, int t) {
    if (static_cast<int>(b.left.size()) != s || static_cast<int>(b.right.size()) != t) return false;
    if (!is_independent(g, b.left) || !is_independent(g, b.right) || !set_intersection(b.left, b.right).empty())
        return false;
    for (Vertex u : b.left)
        for (Vertex v : b.right)
            if (!g.adjacent(u, v)) return false;
    return true;
}

}  // namespace

Tally composer_or_checks(const std::string& composer, int repeats, std::uint64_t seed, int max_r) {
    Tally t;
    Rng rng(seed);
    if (composer == "biclique") {
        auto pools = make_pools<BipartiteInput>([](Rng& r) { return random_bipartite(3, 2, 2, 0.55, r); },
                                                [](const BipartiteInput& in) {
                                                    return bipartite_biclique(in.graph, in.a, in.b, in.k).has_value();
                                                },
                                                rng);
        truth_vectors(pools, repeats, max_r, rng, t, composer, [&](const std::vector<BipartiteInput>& in, bool expected, const std::string& tag) {
            auto c = compose_biclique(in);
            const auto& inst = c.instance;
            const int n = static_cast<int>(in.front().b.size());
            const int log_r = log2_exact(c.inputs);
            check_cover(inst, static_cast<std::size_t>(n + 2 * (n + 1) * log_r), tag, t);
            const int s = static_cast<int>(inst.target("s")), tt = static_cast<int>(inst.target("t"));
            const bool got = find_induced_biclique(inst.graph, s, tt, kComposedLimits).has_value();
            if (got != expected) t.fail(tag + "composed answer differs from OR");
            for (std::size_t i = 0; i < in.size(); ++i)
                if (auto w = bipartite_biclique(in[i].graph, in[i].a, in[i].b, in[i].k))
                    if (!induced_biclique_ok(inst.graph, biclique_witness(c, i, *w), s, tt)) t.fail(tag + "witness");
        });
    } else if (composer == "induced-matching") {
        auto pools = make_pools<BipartiteInput>([](Rng& r) { return random_bipartite(3, 3, 3, 0.3, r); },
                                                [](const BipartiteInput& in) {
                                                    return static_cast<int>(max_induced_matching(in.graph).size()) >= in.k;
                                                },
                                                rng);
        truth_vectors(pools, repeats, max_r, rng, t, composer, [&](const std::vector<BipartiteInput>& in, bool expected, const std::string& tag) {
            auto c = compose_induced_matching(in);
            const auto& inst = c.instance;
            const int n = static_cast<int>(in.front().b.size());
            check_cover(inst, static_cast<std::size_t>(n + 3 * n * log2_exact(c.inputs)), tag, t);
            const auto m = max_induced_matching(inst.graph, kComposedLimits);
            if ((static_cast<long long>(m.size()) >= inst.target("k")) != expected) t.fail(tag + "composed answer differs from OR");
            for (std::size_t i = 0; i < in.size(); ++i) {
                auto mi = max_induced_matching(in[i].graph);
                if (static_cast<int>(mi.size()) < in[i].k) continue;
                mi.resize(static_cast<std::size_t>(in[i].k));
                auto w = induced_matching_witness(c, i, mi);
                if (static_cast<long long>(w.size()) < inst.target("k") || !is_induced_matching(inst.graph, w))
                    t.fail(tag + "witness");
            }
        });
    } else if (composer == "induced-path-scaled") {
        const int n = 3;
        auto pools = make_pools<HamInput>([](Rng& r) { return random_ham(n, r); },
                                          [](const HamInput& in) { return hamiltonian_st_path(in.graph, in.s, in.t).has_value(); },
                                          rng);
        const OracleLimits big{1000, 8};
        truth_vectors(pools, repeats, max_r, rng, t, composer, [&](const std::vector<HamInput>& in, bool expected, const std::string& tag) {
            const int len = induced_path_min_length(n);
            auto c = compose_induced_path(in, len);
            const auto& inst = c.instance;
            check_cover(inst, static_cast<std::size_t>(3 * len + n + n * (n - 1) / 2), tag, t);
            const bool got = find_induced_path(inst.graph, static_cast<int>(inst.target("k")), big).has_value();
            if (got != expected) t.fail(tag + "composed answer differs from OR");
            for (std::size_t i = 0; i < in.size(); ++i)
                if (auto h = hamiltonian_st_path(in[i].graph, in[i].s, in[i].t)) {
                    auto w = induced_path_witness(c, i, *h);
                    if (static_cast<long long>(w.size()) < inst.target("k") || !is_induced_path(inst.graph, w))
                        t.fail(tag + "witness");
                }
        });
    } else if (composer == "psi") {
        auto pools = make_pools<SplitInput>(random_split,
                                            [](const SplitInput& in) {
                                                return static_cast<int>(max_independent_set(in.graph).size()) >= in.k;
                                            },
                                            rng);
        truth_vectors(pools, repeats, max_r, rng, t, composer, [&](const std::vector<SplitInput>& in, bool expected, const std::string& tag) {
            auto c = compose_psi(in);
            const auto& inst = c.instance;
            const int log_r = log2_exact(c.inputs);
            check_cover(inst, static_cast<std::size_t>(4 + 2 * log_r + 11), tag, t);
            auto psi = make_psi(static_cast<int>(inst.target("s")), static_cast<int>(inst.target("t")));
            const bool got = has_induced_subgraph(inst.graph, psi.graph, kComposedLimits);
            if (got != expected) t.fail(tag + "composed answer differs from OR");
            for (std::size_t i = 0; i < in.size(); ++i) {
                auto is = max_independent_set(in[i].graph);
                if (static_cast<int>(is.size()) < in[i].k) continue;
                auto image = psi_witness(c, i, VertexSet(std::vector<Vertex>(is.begin(), is.begin() + in[i].k)));
                bool ok = VertexSet(image).size() == image.size() && static_cast<int>(image.size()) == psi.graph.order();
                for (Vertex a = 0; ok && a < psi.graph.order(); ++a)
                    for (Vertex b = a + 1; ok && b < psi.graph.order(); ++b)
                        ok = psi.graph.adjacent(a, b) ==
                             inst.graph.adjacent(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]);
                if (!ok) t.fail(tag + "witness image is not induced");
            }
        });
    } else {
        throw InputError("unknown composer '" + composer + "'");
    }
    return t;
}

Tally induced_path_full_scale_witness() {
    Tally t;
    // A 3x3 grid with s, t at opposite corners has a snake Hamiltonian path.
    auto grid = [] {
        GraphBuilder b(9);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                if (c + 1 < 3) b.add_edge(3 * r + c, 3 * r + c + 1);
                if (r + 1 < 3) b.add_edge(3 * r + c, 3 * (r + 1) + c);
            }
        return b.build();
    };
    // The grid with its top row cut off is disconnected, so it has no path.
    auto broken = [&] {
        GraphBuilder b(grid());
        b.remove_edge(0, 3);
        b.remove_edge(1, 4);
        b.remove_edge(2, 5);
        return b.build();
    };
    const std::vector<std::vector<HamInput>> lists{
        {HamInput{grid(), 0, 8}},
        {HamInput{broken(), 0, 8}, HamInput{grid(), 0, 8}},
        {HamInput{grid(), 0, 8}, HamInput{broken(), 0, 8}, HamInput{grid(), 0, 8}},
    };
    for (const auto& list : lists) {
        auto c = compose_induced_path(list);
        const auto& inst = c.instance;
        const long long k = inst.target("k");
        if (c.canonical || k != 3LL * 729 + 18) t.fail("full scale: unexpected k* " + std::to_string(k));
        for (std::size_t i = 0; i < list.size(); ++i) {
            auto h = hamiltonian_st_path(list[i].graph, list[i].s, list[i].t);
            if (!h) continue;
            ++t.trials;
            auto w = induced_path_witness(c, i, *h);
            if (static_cast<long long>(w.size()) != k || !is_induced_path(inst.graph, w))
                t.fail("full scale: witness for input " + std::to_string(i) + " is not an induced path on k* vertices");
        }
        check_cover(inst, 3 * 729 + 9 + 36, "full scale: ", t);
    }
    if (hamiltonian_st_path(broken(), 0, 8)) t.fail("full scale: the no-input has a Hamiltonian path (test bug)");
    return t;
}

}  // namespace checks
