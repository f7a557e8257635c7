#include "doctest.h"

#include <random>
#include <set>

#include "checks.hpp"
#include "support.hpp"
#include "vck/errors.hpp"
#include "vck/gadgets.hpp"
#include "vck/named_graphs.hpp"
#include "vck/solve.hpp"

using namespace vck;

namespace {

BipartiteInput bipartite(int a, int b, std::initializer_list<Edge> edges, int k) {
    BipartiteInput in;
    in.graph = graph_from_edges(a + b, edges);
    std::vector<Vertex> av, bv;
    for (Vertex v = 0; v < a; ++v) av.push_back(v);
    for (Vertex v = a; v < a + b; ++v) bv.push_back(v);
    in.a = VertexSet(av);
    in.b = VertexSet(bv);
    in.k = k;
    return in;
}

// A = {0,1,2}, B = {3,4,5}.
BipartiteInput yes_k22() { return bipartite(3, 3, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 5}}, 2); }
BipartiteInput no_k22() { return bipartite(3, 3, {{0, 3}, {1, 4}, {2, 5}, {0, 5}}, 2); }

}  // namespace

TEST_CASE("padding and selector bits") {
    CHECK(pad_to_power_of_two(std::vector<int>{1, 2, 3}) == std::vector<int>{1, 2, 3, 3});
    CHECK(pad_to_power_of_two(std::vector<int>{1, 2, 3, 4}) == std::vector<int>{1, 2, 3, 4});
    CHECK(pad_to_power_of_two(std::vector<int>{7}) == std::vector<int>{7});
    CHECK_THROWS_AS(pad_to_power_of_two(std::vector<int>{}), InputError);
    CHECK(log2_exact(1) == 0);
    CHECK(log2_exact(8) == 3);
    // The last of r inputs gets the all-zero string, and strings are distinct.
    for (std::size_t r : {2u, 4u, 8u}) {
        const int bits = log2_exact(r);
        std::set<int> seen;
        for (std::size_t i = 0; i < r; ++i) {
            int code = 0;
            for (int j = 0; j < bits; ++j) code |= selector_bit(i, r, j) << j;
            seen.insert(code);
            if (i + 1 == r) CHECK(code == 0);
        }
        CHECK(seen.size() == r);
    }
}

TEST_CASE("biclique composition cover size and OR") {
    auto c = compose_biclique({yes_k22(), no_k22()});
    CHECK(c.instance.cover->size() == 3 + 2 * 4 * 1);
    CHECK(is_vertex_cover(c.instance.graph, *c.instance.cover));
    CHECK(solve_instance(c.instance, OracleLimits{64, 8}).yes);
    auto none = compose_biclique({no_k22(), no_k22()});
    CHECK_FALSE(solve_instance(none.instance, OracleLimits{64, 8}).yes);
    auto one = compose_biclique({yes_k22()});
    CHECK(solve_instance(one.instance, OracleLimits{64, 8}).yes);

    auto w = bipartite_biclique(yes_k22().graph, yes_k22().a, yes_k22().b, 2);
    REQUIRE(w);
    auto big = biclique_witness(c, 0, *w);
    CHECK(static_cast<long long>(big.left.size()) == c.instance.target("s"));
    CHECK(static_cast<long long>(big.right.size()) == c.instance.target("t"));

    auto other = bipartite(3, 2, {{0, 3}}, 2);
    CHECK_THROWS_AS(compose_biclique({yes_k22(), other}), ClassError);
}

TEST_CASE("induced matching composition cover size and OR") {
    auto yes = bipartite(3, 3, {{0, 3}, {1, 4}, {2, 5}}, 3);
    auto no = bipartite(3, 3, {{0, 3}, {1, 4}, {2, 5}, {0, 4}}, 3);
    auto c = compose_induced_matching({yes, no});
    CHECK(c.instance.cover->size() == 12u);
    CHECK(is_vertex_cover(c.instance.graph, *c.instance.cover));
    CHECK(c.instance.target("k") == 3 + 3);
    auto w = induced_matching_witness(c, 0, {{0, 3}, {1, 4}, {2, 5}});
    CHECK(static_cast<long long>(w.size()) == c.instance.target("k"));
    CHECK(is_induced_matching(c.instance.graph, w));
    CHECK(solve_instance(c.instance, OracleLimits{64, 8}).yes);
    CHECK_FALSE(solve_instance(compose_induced_matching({no, no}).instance, OracleLimits{64, 8}).yes);
}

TEST_CASE("induced path composition sizes and canonical mode") {
    CHECK(induced_path_min_length(9) == 7 * 91 + 4);
    auto path3 = HamInput{path_graph(3), 0, 2};
    auto broken3 = HamInput{graph_from_edges(3, {{0, 1}}), 0, 2};
    auto yes = compose_induced_path({path3});
    CHECK(yes.canonical);
    CHECK(solve_instance(yes.instance).yes);
    auto no = compose_induced_path({broken3, broken3});
    CHECK(no.canonical);
    CHECK_FALSE(solve_instance(no.instance).yes);
    CHECK_THROWS_AS(compose_induced_path({path3}, 10), RangeError);
    CHECK_THROWS_AS(compose_induced_path({path3, HamInput{path_graph(4), 0, 3}}), ClassError);

    auto scaled = compose_induced_path({broken3, path3}, induced_path_min_length(3));
    CHECK_FALSE(scaled.canonical);
    CHECK(scaled.instance.target("k") == 3 * induced_path_min_length(3) + 6);
    auto w = induced_path_witness(scaled, 1, {0, 1, 2});
    CHECK(is_induced_path(scaled.instance.graph, w));
    CHECK(static_cast<long long>(w.size()) == scaled.instance.target("k"));
}

TEST_CASE("induced path composition at full scale") {
    auto t = checks::induced_path_full_scale_witness();
    INFO(t.first_failure);
    CHECK(t.failures == 0);
    CHECK(t.trials > 0);
}

TEST_CASE("psi graphs") {
    CHECK(make_psi(0, 0).graph.order() == 11);
    CHECK(make_psi(1, 0).graph.order() == 12);
    auto p = make_psi(2, 3);
    CHECK(p.graph.order() == 16);
    CHECK(is_vertex_cover(p.graph, p.cover));
    CHECK(is_clique(p.graph, VertexSet{0, 1, 2, 3, 4}));
    CHECK(is_clique(p.graph, VertexSet{5, 6, 7, 8}));
    const OracleLimits big{16, 16};
    CHECK(has_induced_subgraph(p.graph, p.graph, big));
    CHECK_FALSE(has_induced_subgraph(p.graph, make_psi(3, 2).graph, big));
}

TEST_CASE("psi composition validates the split form") {
    SplitInput ok;
    ok.graph = graph_from_edges(5, {{1, 2}, {3, 4}, {0, 1}, {0, 3}});
    ok.y = VertexSet{0};
    ok.k = 2;
    CHECK_NOTHROW(compose_psi({ok}));

    SplitInput p3 = ok;
    p3.graph = graph_from_edges(5, {{1, 2}, {2, 3}, {0, 4}});
    CHECK_THROWS_AS(compose_psi({p3}), InputError);

    SplitInput not_independent = ok;
    not_independent.graph = graph_from_edges(5, {{1, 2}, {3, 4}, {0, 1}});
    not_independent.y = VertexSet{0, 1};
    CHECK_THROWS_AS(compose_psi({not_independent}), InputError);

    SplitInput other_k = ok;
    other_k.k = 3;
    CHECK_THROWS_AS(compose_psi({ok, other_k}), ClassError);

    // Independent set {0, 2, 4}: Y vertex 0 plus one end of each edge.
    ok.k = 3;
    auto c = compose_psi({ok, ok});
    auto psi = make_psi(3, 1);
    auto image = psi_witness(c, 1, VertexSet{0, 2, 4});
    REQUIRE(static_cast<int>(image.size()) == psi.graph.order());
    for (Vertex a = 0; a < psi.graph.order(); ++a)
        for (Vertex b = a + 1; b < psi.graph.order(); ++b)
            CHECK(psi.graph.adjacent(a, b) ==
                  c.instance.graph.adjacent(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]));
}

TEST_CASE("composers act as OR (small runs, r up to 4)") {
    for (const char* name : {"biclique", "induced-matching", "psi", "induced-path-scaled"}) {
        auto t = checks::composer_or_checks(name, 1, 17, 4);
        INFO(name << ": " << t.first_failure);
        CHECK(t.failures == 0);
        CHECK(t.trials == 2 + 4 + 16);
    }
}

TEST_CASE("perfect code to minor testing") {
    // Terminals 0..3, candidates 4..6, each candidate sees two terminals.
    GraphBuilder b(7);
    b.add_edge(4, 0);
    b.add_edge(4, 1);
    b.add_edge(5, 2);
    b.add_edge(5, 3);
    b.add_edge(6, 1);
    b.add_edge(6, 2);
    const VertexSet t{0, 1, 2, 3}, n{4, 5, 6};
    auto yes = perfect_code_to_minor(b.build(), t, n, 2);
    REQUIRE_FALSE(yes.verdict);
    CHECK(yes.code_size == 2);
    CHECK(yes.instance.query->order() == 6);
    CHECK(yes.instance.cover == t);
    CHECK(has_minor(yes.instance.graph, *yes.instance.query, OracleLimits{16, 8}));

    // Everything goes through terminal 0, so no two candidates are disjoint.
    auto no_graph = graph_from_edges(7, {{4, 0}, {4, 1}, {5, 0}, {5, 2}, {6, 0}, {6, 3}});
    auto no = perfect_code_to_minor(no_graph, t, n, 2);
    CHECK((no.verdict ? !*no.verdict : !has_minor(no.instance.graph, *no.instance.query, OracleLimits{16, 8})));

    // Three terminals with r = 2 cannot be hit exactly once each.
    auto odd = perfect_code_to_minor(graph_from_edges(5, {{3, 0}, {3, 1}, {4, 1}, {4, 2}}), VertexSet{0, 1, 2},
                                     VertexSet{3, 4}, 5);
    REQUIRE(odd.verdict);
    CHECK_FALSE(*odd.verdict);

    auto irregular = graph_from_edges(5, {{3, 0}, {3, 1}, {4, 2}});
    CHECK_THROWS_AS(perfect_code_to_minor(irregular, VertexSet{0, 1, 2}, VertexSet{3, 4}, 2), InputError);
}

TEST_CASE("perfect code transform agrees with the perfect code oracle") {
    std::mt19937_64 rng(23);
    int decided_by_minor = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int terms = 2 + static_cast<int>(rng() % 5);
        const int r = 1 + static_cast<int>(rng() % std::min(3, terms));
        const int cands = 1 + static_cast<int>(rng() % 5);
        GraphBuilder b(terms + cands);
        for (int c = 0; c < cands; ++c) {
            std::vector<Vertex> pick;
            for (Vertex v = 0; v < terms; ++v) pick.push_back(v);
            std::shuffle(pick.begin(), pick.end(), rng);
            for (int i = 0; i < r; ++i) b.add_edge(terms + c, pick[static_cast<std::size_t>(i)]);
        }
        auto g = b.build();
        VertexSet t = testing::subset(terms + cands, (std::uint64_t{1} << terms) - 1);
        VertexSet n = set_difference(all_vertices(g), t);
        const int k = static_cast<int>(rng() % (cands + 1));
        const bool truth = perfect_code(g, t, n, k).has_value();
        auto m = perfect_code_to_minor(g, t, n, k);
        INFO("trial " << trial);
        if (m.verdict) {
            CHECK(*m.verdict == truth);
        } else {
            ++decided_by_minor;
            CHECK(m.instance.cover->size() + static_cast<std::size_t>(m.instance.query->order()) <=
                  2 * t.size() + static_cast<std::size_t>(k));
            CHECK(has_minor(m.instance.graph, *m.instance.query, OracleLimits{16, 12}) == truth);
        }
    }
    CHECK(decided_by_minor > 10);
}

TEST_CASE("independent set to induced biclique") {
    auto inst = is_to_biclique_instance(complete_graph(2), 1, 1);
    CHECK(inst.graph.order() == 14);
    CHECK(inst.target("t") == 7);
    CHECK(inst.target("s") == 1);
    CHECK(is_vertex_cover(inst.graph, *inst.cover));
    CHECK_THROWS_AS(is_to_biclique_instance(complete_graph(2), 1, 0), PreconditionError);

    std::mt19937_64 rng(29);
    const OracleLimits big{40, 8};
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        auto g = testing::random_graph(n, 0.5, rng);
        const int c = 1 + static_cast<int>(rng() % 2);
        const int k = 1 + static_cast<int>(rng() % (n + 1));
        auto bi = is_to_biclique_instance(g, k, c);
        INFO("trial " << trial << " n=" << n << " k=" << k << " c=" << c);
        CHECK(find_induced_biclique(bi.graph, c, static_cast<int>(bi.target("t")), big).has_value() ==
              (testing::brute_independence(g) >= k));
    }
    auto empty2 = is_to_biclique_instance(Graph(2), 2, 1);
    CHECK(find_induced_biclique(empty2.graph, 1, static_cast<int>(empty2.target("t")), big).has_value());
}
