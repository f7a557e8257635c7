#include "vck/solve.hpp"

#include <limits>

#include "vck/errors.hpp"
#include "vck/gadgets.hpp"
#include "vck/named_graphs.hpp"
#include "vck/properties.hpp"

namespace vck {

using json = nlohmann::ordered_json;

namespace {

json set_json(const VertexSet& s) {
    json out = json::array();
    for (Vertex v : s) out.push_back(v);
    return out;
}

json seq_json(const std::vector<Vertex>& s) {
    json out = json::array();
    for (Vertex v : s) out.push_back(v);
    return out;
}

void expect(bool ok, const char* what) {
    if (!ok) throw ContractError(std::string("solver produced an invalid witness: ") + what);
}

int as_int(long long v) {
    if (v > std::numeric_limits<int>::max()) throw InputError("target too large");
    return static_cast<int>(v);
}

bool independent_pair_sides(const Graph& g, const Biclique& b) {
    if (!is_independent(g, b.left) || !is_independent(g, b.right) || !set_intersection(b.left, b.right).empty())
        return false;
    for (Vertex u : b.left)
        for (Vertex v : b.right)
            if (!g.adjacent(u, v)) return false;
    return true;
}

SolveResult no() { return SolveResult{false, nullptr}; }

SolveResult from_minor(const Graph& g, const Graph& h, const OracleLimits& limits) {
    auto m = find_minor(g, h, limits);
    if (!m) return no();
    expect(verify_minor_model(g, h, *m), "minor model");
    json sets = json::array();
    for (const auto& s : m->branch_sets) sets.push_back(set_json(s));
    return SolveResult{true, json{{"branch-sets", sets}}};
}

}  // namespace

long long largest_induced_vertex_target(const Instance& inst) {
    const long long k = inst.target("k");
    auto p = parse_property(*inst.property);
    if (p.packing_unit == 0) return k;
    long long out;
    if (__builtin_mul_overflow(k, static_cast<long long>(p.packing_unit), &out)) throw RangeError("target overflow");
    return out;
}

SolveResult solve_instance(const Instance& inst, const OracleLimits& limits) {
    const Graph& g = inst.graph;
    switch (inst.problem) {
        case Problem::deletion: {
            auto p = parse_property(*inst.property);
            auto s = solve_deletion(g, p, as_int(inst.target("k")), limits);
            if (!s) return no();
            expect(static_cast<long long>(s->size()) <= inst.target("k"), "deletion set too large");
            expect(!p.find_witness(delete_vertices(g, *s).graph), "remainder still has a member");
            return SolveResult{true, json{{"deleted", set_json(*s)}}};
        }
        case Problem::largest_induced: {
            auto p = parse_property(*inst.property);
            const long long k = largest_induced_vertex_target(inst);
            // Zero packing copies need no vertices at all.
            if (k <= 0 && p.packing_unit > 0) return SolveResult{true, json{{"kept", json::array()}}};
            auto s = solve_largest_induced(g, p, as_int(k), limits);
            if (!s) return no();
            expect(static_cast<long long>(s->size()) >= k, "member too small");
            expect(p.member(induced_subgraph(g, *s).graph), "kept set is not a member");
            return SolveResult{true, json{{"kept", set_json(*s)}}};
        }
        case Problem::partition: {
            auto p = parse_property(*inst.property);
            const int q = as_int(inst.target("q"));
            auto cls = solve_partition(g, p, q, limits);
            if (!cls) return no();
            json parts = json::array();
            for (int c = 0; c < q; ++c) {
                std::vector<Vertex> part;
                for (Vertex v = 0; v < g.order(); ++v)
                    if ((*cls)[static_cast<std::size_t>(v)] == c) part.push_back(v);
                expect(!p.find_witness(induced_subgraph(g, VertexSet(part)).graph), "a class contains a member");
                parts.push_back(seq_json(part));
            }
            for (int c : *cls) expect(c >= 0 && c < q, "class out of range");
            return SolveResult{true, json{{"classes", parts}}};
        }
        case Problem::clique_minor:
            return from_minor(g, complete_graph(as_int(inst.target("t"))), limits);
        case Problem::minor_test:
            return from_minor(g, *inst.query, limits);
        case Problem::biclique_induced:
        case Problem::bipartite_biclique: {
            std::optional<Biclique> b;
            int s, t;
            if (inst.problem == Problem::biclique_induced) {
                s = as_int(inst.target("s"));
                t = as_int(inst.target("t"));
                b = find_induced_biclique(g, s, t, limits);
            } else {
                s = t = as_int(inst.target("k"));
                b = bipartite_biclique(g, inst.side_a, inst.side_b, s, limits);
            }
            if (!b) return no();
            expect(static_cast<int>(b->left.size()) == s && static_cast<int>(b->right.size()) == t, "biclique sides");
            if (inst.problem == Problem::biclique_induced)
                expect(independent_pair_sides(g, *b), "biclique is not induced");
            else
                for (Vertex u : b->left)
                    for (Vertex v : b->right) expect(g.adjacent(u, v), "biclique misses an edge");
            return SolveResult{true, json{{"left", set_json(b->left)}, {"right", set_json(b->right)}}};
        }
        case Problem::induced_path: {
            auto path = find_induced_path(g, as_int(inst.target("k")), limits);
            if (!path) return no();
            expect(static_cast<long long>(path->size()) >= inst.target("k"), "path too short");
            expect(is_induced_path(g, *path), "not an induced path");
            return SolveResult{true, json{{"path", seq_json(*path)}}};
        }
        case Problem::induced_matching: {
            auto m = max_induced_matching(g, limits);
            if (static_cast<long long>(m.size()) < inst.target("k")) return no();
            expect(is_induced_matching(g, m), "not an induced matching");
            json edges = json::array();
            for (auto e : m) edges.push_back(json::array({e.u, e.v}));
            return SolveResult{true, json{{"matching", edges}}};
        }
        case Problem::perfect_code: {
            auto code = perfect_code(g, inst.side_a, inst.side_b, as_int(inst.target("k")), limits);
            if (!code) return no();
            expect(static_cast<long long>(code->size()) <= inst.target("k"), "code too large");
            for (Vertex tau : inst.side_a) {
                int hits = 0;
                for (Vertex u : *code) hits += g.adjacent(u, tau) ? 1 : 0;
                expect(hits == 1, "terminal not hit exactly once");
            }
            return SolveResult{true, json{{"code", set_json(*code)}}};
        }
        case Problem::hamiltonian_st: {
            const auto s = static_cast<Vertex>(inst.target("s")), t = static_cast<Vertex>(inst.target("t"));
            auto path = hamiltonian_st_path(g, s, t, limits);
            if (!path) return no();
            expect(static_cast<int>(path->size()) == g.order() && path->front() == s && path->back() == t, "endpoints");
            expect(VertexSet(*path).size() == path->size(), "repeated vertex");
            for (std::size_t i = 0; i + 1 < path->size(); ++i) expect(g.adjacent((*path)[i], (*path)[i + 1]), "missing edge");
            return SolveResult{true, json{{"path", seq_json(*path)}}};
        }
        case Problem::psi_test: {
            auto psi = make_psi(as_int(inst.target("s")), as_int(inst.target("t")));
            auto image = find_induced_subgraph(g, psi.graph, limits);
            if (!image) return no();
            const Graph& h = psi.graph;
            expect(VertexSet(*image).size() == image->size(), "image not injective");
            for (Vertex x = 0; x < h.order(); ++x)
                for (Vertex y = x + 1; y < h.order(); ++y)
                    expect(h.adjacent(x, y) == g.adjacent((*image)[static_cast<std::size_t>(x)], (*image)[static_cast<std::size_t>(y)]),
                           "image is not induced");
            return SolveResult{true, json{{"image", seq_json(*image)}}};
        }
        case Problem::independent_set: {
            auto s = max_independent_set(g, limits);
            if (static_cast<long long>(s.size()) < inst.target("k")) return no();
            expect(is_independent(g, s), "not independent");
            return SolveResult{true, json{{"independent", set_json(s)}}};
        }
    }
    throw InputError("unsupported problem");
}

}  // namespace vck
