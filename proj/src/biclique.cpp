#include <limits>

#include "vck/combinations.hpp"
#include "vck/errors.hpp"
#include "vck/kernels.hpp"

namespace vck {

namespace {

std::uint64_t binomial(std::size_t n, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
    unsigned __int128 out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - static_cast<std::size_t>(i) + 1) / static_cast<unsigned>(i);
        if (out > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(out);
}

bool independent(const Graph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

std::vector<Vertex> common_neighbours(const Graph& g, const std::vector<Vertex>& a) {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < g.order(); ++w) {
        bool all = true;
        for (Vertex v : a) all = all && g.adjacent(v, w);
        if (all) out.push_back(w);
    }
    return out;
}

// Direct search for an induced K_{c,t}; polynomial for constant c and t.
bool small_biclique(const Graph& g, int c, int t) {
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g.order(); ++v) all.push_back(v);
    return any_combination(all, static_cast<std::size_t>(c), [&](const std::vector<Vertex>& a) {
        if (!independent(g, a)) return false;
        auto common = common_neighbours(g, a);
        return any_combination(common, static_cast<std::size_t>(t),
                               [&](const std::vector<Vertex>& b) { return independent(g, b); });
    });
}

bool has_independent_subset(const Graph& g, const std::vector<Vertex>& pool, int c) {
    return any_combination(pool, static_cast<std::size_t>(c),
                           [&](const std::vector<Vertex>& s) { return independent(g, s); });
}

CompressedForm verdict_form(bool yes, std::vector<std::string> trace, std::uint64_t bound) {
    CompressedForm f;
    f.kind = CompressedForm::Kind::verdict;
    f.verdict = yes;
    f.trace = std::move(trace);
    f.size_bound = bound;
    return f;
}

}  // namespace

std::string_view compressed_kind_name(CompressedForm::Kind k) {
    switch (k) {
        case CompressedForm::Kind::verdict:
            return "verdict";
        case CompressedForm::Kind::small_instance:
            return "small-instance";
        case CompressedForm::Kind::or_of_independent_set:
            return "or-of-independent-set";
    }
    return "?";
}

std::uint64_t biclique_small_bound(std::size_t x, int c) {
    std::uint64_t out;
    if (__builtin_mul_overflow(static_cast<std::uint64_t>(x), binomial(x, c), &out) ||
        __builtin_add_overflow(out, static_cast<std::uint64_t>(x), &out))
        return std::numeric_limits<std::uint64_t>::max();
    return out;
}

CompressedForm compress_biclique(const Graph& g, const VertexSet& x, int t, int c) {
    for (Vertex v : x)
        if (v < 0 || v >= g.order()) throw PreconditionError("compress_biclique: cover contains an invalid vertex");
    if (!is_vertex_cover(g, x)) throw PreconditionError("compress_biclique: X is not a vertex cover");
    if (c < 1) throw PreconditionError("compress_biclique: c must be at least 1");
    const std::uint64_t bound = biclique_small_bound(x.size(), c);
    std::vector<std::string> trace;
    if (t <= c) {
        trace.push_back("t <= c: decided by direct search");
        return verdict_form(small_biclique(g, c, t), std::move(trace), bound);
    }

    // Degree filter: a vertex on either side needs c independent neighbours.
    Graph cur = g;
    std::vector<Vertex> orig;
    for (Vertex v = 0; v < g.order(); ++v) orig.push_back(v);
    VertexSet cx = x;
    std::size_t removed = 0;
    while (true) {
        std::vector<Vertex> drop;
        for (Vertex v = 0; v < cur.order(); ++v)
            if (!has_independent_subset(cur, cur.neighbors(v), c)) drop.push_back(v);
        if (drop.empty()) break;
        removed += drop.size();
        auto sub = delete_vertices(cur, VertexSet(drop));
        cx = sub.to_local(cx);
        std::vector<Vertex> next;
        for (Vertex v : sub.original) next.push_back(orig[static_cast<std::size_t>(v)]);
        orig = std::move(next);
        cur = std::move(sub.graph);
    }
    trace.push_back("degree filter removed " + std::to_string(removed) + " vertices");

    const std::size_t outside = static_cast<std::size_t>(cur.order()) - cx.size();
    if (cx.size() < static_cast<std::size_t>(c)) {
        trace.push_back("fewer than c cover vertices survive the filter");
        return verdict_form(false, std::move(trace), bound);
    }
    const std::uint64_t sets = binomial(cx.size(), c);
    unsigned __int128 need = static_cast<unsigned __int128>(t) * sets;
    if (static_cast<unsigned __int128>(outside) >= need) {
        trace.push_back("abundance: " + std::to_string(outside) + " outside vertices >= t*C(|X|,c)");
        return verdict_form(true, std::move(trace), bound);
    }
    if (static_cast<std::size_t>(t) <= cx.size()) {
        trace.push_back("t <= |X|: the filtered graph is the kernel");
        CompressedForm f;
        f.kind = CompressedForm::Kind::small_instance;
        f.size_bound = bound;
        Instance inst;
        inst.problem = Problem::biclique_induced;
        inst.graph = std::move(cur);
        inst.cover = cx;
        inst.targets["s"] = c;
        inst.targets["t"] = t;
        f.instance = std::move(inst);
        f.trace = std::move(trace);
        return f;
    }

    // t > |X|: the c-side lies inside X. Guess it and ask for t independent
    // common neighbours.
    CompressedForm f;
    f.kind = CompressedForm::Kind::or_of_independent_set;
    f.size_bound = bound;
    any_combination(cx.items(), static_cast<std::size_t>(c), [&](const std::vector<Vertex>& a) {
        if (!independent(cur, a)) return false;
        std::vector<Vertex> anchor;
        for (Vertex v : a) anchor.push_back(orig[static_cast<std::size_t>(v)]);
        auto sub = induced_subgraph(cur, VertexSet(common_neighbours(cur, a)));
        VertexSet sx = sub.to_local(cx);
        auto inner = kernel_independent_set(sub.graph, sx, t);
        std::string label = "guess {";
        for (std::size_t i = 0; i < anchor.size(); ++i) label += (i ? "," : "") + std::to_string(anchor[i]);
        label += "}: ";
        if (inner.verdict == Verdict::trivial_no) {
            f.trace.push_back(label + "skipped, fewer than t common neighbours");
            return false;
        }
        IndependentSetEntry e;
        e.anchor = VertexSet(anchor);
        if (inner.verdict == Verdict::trivial_yes) {
            e.graph = Graph(1);
            e.target = 1;
            f.trace.push_back(label + "inner kernel answered yes");
        } else {
            e.graph = inner.instance->graph;
            e.cover = *inner.instance->cover;
            e.target = static_cast<int>(inner.instance->target("k"));
            f.trace.push_back(label + "independent set instance on " + std::to_string(e.graph.order()) + " vertices");
        }
        f.entries.push_back(std::move(e));
        return false;
    });
    trace.insert(trace.end(), f.trace.begin(), f.trace.end());
    f.trace = std::move(trace);
    return f;
}

bool evaluate_compressed(const CompressedForm& f, const OracleLimits& limits) {
    switch (f.kind) {
        case CompressedForm::Kind::verdict:
            return f.verdict;
        case CompressedForm::Kind::small_instance: {
            const auto& inst = *f.instance;
            return find_induced_biclique(inst.graph, static_cast<int>(inst.target("s")),
                                         static_cast<int>(inst.target("t")), limits)
                .has_value();
        }
        case CompressedForm::Kind::or_of_independent_set:
            for (const auto& e : f.entries)
                if (static_cast<int>(max_independent_set(e.graph, limits).size()) >= e.target) return true;
            return false;
    }
    return false;
}

}  // namespace vck
