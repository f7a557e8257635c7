#include "vck/kernels.hpp"

#include <limits>

#include "vck/combinations.hpp"
#include "vck/errors.hpp"

namespace vck {

namespace {

void require_cover(const Graph& g, const VertexSet& x, const char* what) {
    for (Vertex v : x)
        if (v < 0 || v >= g.order()) throw PreconditionError(std::string(what) + ": cover contains an invalid vertex");
    if (!is_vertex_cover(g, x)) throw PreconditionError(std::string(what) + ": X is not a vertex cover");
}

KernelResult trivial(Verdict v, std::string why, std::uint64_t bound = 0) {
    KernelResult r;
    r.verdict = v;
    r.size_bound = bound;
    r.justification = why;
    r.trace.push_back(std::move(why));
    return r;
}

std::vector<Vertex> identity(int n) {
    std::vector<Vertex> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
}

// Runs Reduce and wraps the result as an instance of the same problem.
KernelResult reduced(const Graph& g, const VertexSet& x, long long ell, int c, Instance shape, std::string rule) {
    auto rr = reduce(g, x, ell, c);
    KernelResult r;
    r.verdict = Verdict::reduced;
    r.size_bound = rr.report.bound;
    r.trace.push_back(rule + ": reduce with ell=" + std::to_string(ell) + ", c=" + std::to_string(c) + " kept " +
                      std::to_string(rr.reduced.graph.order()) + " of " + std::to_string(g.order()) + " vertices");
    shape.graph = rr.reduced.graph;
    shape.cover = rr.reduced.to_local(x);
    r.instance = std::move(shape);
    r.original = rr.reduced.original;
    r.report = std::move(rr.report);
    return r;
}

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out)) throw RangeError("target overflow");
    return out;
}

std::optional<int> edgeless_member_order(const PropertySpec& p) {
    std::optional<int> best;
    for (const auto& h : p.family)
        if (h.size() == 0 && (!best || h.order() < *best)) best = h.order();
    return best;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::trivial_yes:
            return "trivial-yes";
        case Verdict::trivial_no:
            return "trivial-no";
        case Verdict::reduced:
            return "reduced";
    }
    return "?";
}

KernelResult kernel_deletion(const Graph& g, const VertexSet& x, int k, const PropertySpec& p) {
    require_cover(g, x, "kernel_deletion");
    const int n = g.order();
    if (!p.has_edge_guarantee) {
        auto m = edgeless_member_order(p);
        if (!m) throw PreconditionError("kernel_deletion: " + p.name + " has members without edges");
        // Every graph on at least m vertices contains the edgeless member, so
        // fewer than m vertices may remain.
        const int keep = std::max(0, n - k);
        if (keep >= *m)
            return trivial(Verdict::trivial_no, "edgeless member on " + std::to_string(*m) +
                                                    " vertices: at most " + std::to_string(*m - 1) + " vertices may remain");
        if (p.packing_unit > 0 || keep == 0)
            return trivial(Verdict::trivial_yes, "edgeless member: deleting down to " + std::to_string(keep) +
                                                     " vertices suffices");
        std::vector<Vertex> all = identity(n);
        bool found = any_combination(all, static_cast<std::size_t>(keep), [&](const std::vector<Vertex>& w) {
            return !p.member(induced_subgraph(g, VertexSet(w)).graph);
        });
        return trivial(found ? Verdict::trivial_yes : Verdict::trivial_no,
                       "edgeless member: searched every remainder on " + std::to_string(keep) + " vertices");
    }
    if (k < 0) return trivial(Verdict::trivial_no, "negative budget");
    if (static_cast<std::size_t>(k) >= x.size())
        return trivial(Verdict::trivial_yes, "k >= |X|: deleting X leaves an edgeless graph");
    Instance shape;
    shape.problem = Problem::deletion;
    shape.targets["k"] = k;
    shape.property = p.name;
    const long long ell = k + p.p_of(static_cast<long long>(x.size()));
    return reduced(g, x, ell, p.c_pi, std::move(shape), "deletion");
}

KernelResult kernel_largest_induced(const Graph& g, const VertexSet& x, int k, const PropertySpec& p) {
    require_cover(g, x, "kernel_largest_induced");
    const int n = g.order();
    if (p.packing_unit > 0) {
        if (k <= 0) return trivial(Verdict::trivial_yes, "zero copies are always packable");
        if (p.family.front().size() == 0) {
            bool yes = n >= checked_mul(k, p.packing_unit);
            return trivial(yes ? Verdict::trivial_yes : Verdict::trivial_no,
                           "edgeless H: k copies fit iff n >= k*|V(H)|");
        }
    }
    if (!p.bounded_members)
        throw PreconditionError("kernel_largest_induced: " + p.name + " does not bound members by their vertex cover");
    Instance shape;
    shape.problem = Problem::largest_induced;
    shape.targets["k"] = k;
    shape.property = p.name;
    return reduced(g, x, p.p_of(static_cast<long long>(x.size())), p.c_pi, std::move(shape), "largest-induced");
}

KernelResult kernel_partition(const Graph& g, const VertexSet& x, int q, const PropertySpec& p) {
    require_cover(g, x, "kernel_partition");
    if (q <= 0) {
        if (g.order() > 0) return trivial(Verdict::trivial_no, "q = 0 parts cannot hold a nonempty vertex set");
        return trivial(Verdict::trivial_yes, "empty graph needs no parts");
    }
    Instance shape;
    shape.problem = Problem::partition;
    shape.targets["q"] = q;
    shape.property = p.name;
    const long long ell = checked_mul(q, p.p_of(static_cast<long long>(x.size())));
    return reduced(g, x, ell, static_cast<int>(checked_mul(q, p.c_pi)), std::move(shape), "partition");
}

KernelResult kernel_independent_set(const Graph& g, const VertexSet& x, int k) {
    require_cover(g, x, "kernel_independent_set");
    const int n = g.order();
    if (k > n) return trivial(Verdict::trivial_no, "k > n");
    if (k <= 0) return trivial(Verdict::trivial_yes, "k <= 0");
    auto inner = kernel_deletion(g, x, n - k, k2_property());
    if (inner.verdict == Verdict::trivial_yes)
        return trivial(Verdict::trivial_yes, "vertex cover dual n-k >= |X|: X itself is small enough");
    KernelResult r = std::move(inner);
    auto& inst = *r.instance;
    const int dual = n - k;
    inst.problem = Problem::independent_set;
    inst.property.reset();
    inst.targets.clear();
    inst.targets["k"] = inst.graph.order() - dual;
    r.trace.insert(r.trace.begin(), "independent set via vertex cover dual k'=" + std::to_string(dual));
    return r;
}

std::optional<std::pair<Vertex, Vertex>> clique_fill_candidate(const Graph& g, const VertexSet& x) {
    const std::size_t threshold = (x.size() + 1) * (x.size() + 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            Vertex v = x[i], w = x[j];
            if (g.adjacent(v, w)) continue;
            std::size_t common = 0;
            const auto& a = g.neighbors(v);
            const auto& b = g.neighbors(w);
            for (std::size_t p = 0, q = 0; p < a.size() && q < b.size();) {
                if (a[p] < b[q]) ++p;
                else if (b[q] < a[p]) ++q;
                else {
                    if (!x.contains(a[p])) ++common;
                    ++p, ++q;
                }
            }
            if (common > threshold) return std::make_pair(v, w);
        }
    return std::nullopt;
}

std::optional<Vertex> clique_large_simplicial(const Graph& g, const VertexSet& x, int t) {
    for (Vertex s = 0; s < g.order(); ++s)
        if (!x.contains(s) && g.degree(s) >= t - 1 && is_simplicial(g, s)) return s;
    return std::nullopt;
}

std::optional<Vertex> clique_small_simplicial(const Graph& g, const VertexSet& x, int t) {
    for (Vertex s = 0; s < g.order(); ++s)
        if (!x.contains(s) && g.degree(s) < t - 1 && is_simplicial(g, s)) return s;
    return std::nullopt;
}

std::uint64_t clique_minor_bound(std::size_t x) {
    std::uint64_t b = x + 1, out = 1;
    for (int i = 0; i < 4; ++i)
        if (__builtin_mul_overflow(out, b, &out)) return std::numeric_limits<std::uint64_t>::max();
    return out;
}

KernelResult kernel_clique_minor(const Graph& g, const VertexSet& x, int t) {
    require_cover(g, x, "kernel_clique_minor");
    const std::uint64_t bound = clique_minor_bound(x.size());
    if (t <= 0) return trivial(Verdict::trivial_yes, "K_0 is a minor of every graph", bound);
    if (static_cast<std::size_t>(t) > x.size() + 1)
        return trivial(Verdict::trivial_no, "t > |X|+1: a K_t minor needs vertex cover number at least t-1", bound);

    Graph cur = g;
    VertexSet cx = x;
    std::vector<Vertex> orig = identity(g.order());
    std::vector<std::string> trace;
    while (true) {
        if (auto e = clique_fill_candidate(cur, cx)) {
            GraphBuilder b(cur);
            b.add_edge(e->first, e->second);
            cur = b.build();
            trace.push_back("rule 1: add edge " + std::to_string(orig[static_cast<std::size_t>(e->first)]) + "-" +
                            std::to_string(orig[static_cast<std::size_t>(e->second)]));
            continue;
        }
        if (auto s = clique_large_simplicial(cur, cx, t)) {
            trace.push_back("rule 2: vertex " + std::to_string(orig[static_cast<std::size_t>(*s)]) +
                            " is simplicial with degree >= t-1");
            KernelResult r = trivial(Verdict::trivial_yes, trace.back(), bound);
            r.trace = std::move(trace);
            return r;
        }
        if (auto s = clique_small_simplicial(cur, cx, t)) {
            trace.push_back("rule 3: delete simplicial vertex " + std::to_string(orig[static_cast<std::size_t>(*s)]));
            auto sub = delete_vertices(cur, VertexSet{*s});
            cx = sub.to_local(cx);
            std::vector<Vertex> next;
            for (Vertex v : sub.original) next.push_back(orig[static_cast<std::size_t>(v)]);
            orig = std::move(next);
            cur = std::move(sub.graph);
            continue;
        }
        break;
    }
    KernelResult r;
    r.verdict = Verdict::reduced;
    r.size_bound = bound;
    r.trace = std::move(trace);
    Instance inst;
    inst.problem = Problem::clique_minor;
    inst.graph = std::move(cur);
    inst.cover = cx;
    inst.targets["t"] = t;
    r.instance = std::move(inst);
    r.original = std::move(orig);
    return r;
}

KernelResult kernelize(const Instance& inst) {
    if (!inst.cover) throw InputError("kernelize: instance has no cover");
    const Graph& g = inst.graph;
    const VertexSet& x = *inst.cover;
    auto narrow = [](long long v) {
        if (v > std::numeric_limits<int>::max()) throw InputError("target too large");
        return static_cast<int>(v);
    };
    switch (inst.problem) {
        case Problem::deletion:
            return kernel_deletion(g, x, narrow(inst.target("k")), parse_property(*inst.property));
        case Problem::largest_induced:
            return kernel_largest_induced(g, x, narrow(inst.target("k")), parse_property(*inst.property));
        case Problem::partition:
            return kernel_partition(g, x, narrow(inst.target("q")), parse_property(*inst.property));
        case Problem::clique_minor:
            return kernel_clique_minor(g, x, narrow(inst.target("t")));
        case Problem::independent_set:
            return kernel_independent_set(g, x, narrow(inst.target("k")));
        default:
            throw InputError("no kernel for problem '" + std::string(problem_name(inst.problem)) + "'");
    }
}

}  // namespace vck
