#include "vck/reduce.hpp"

#include <limits>
#include <map>

#include "vck/errors.hpp"

namespace vck {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

}  // namespace

std::uint64_t reduce_bound(std::size_t x, long long ell, int c) {
    std::uint64_t sum = 0, binom = 1, pow2 = 1;
    for (int i = 0; i <= c && static_cast<std::size_t>(i) <= x; ++i) {
        if (i > 0 && binom != kSaturated) {
            // C(x, i) = C(x, i-1) * (x - i + 1) / i stays exact in 128 bits.
            unsigned __int128 next = static_cast<unsigned __int128>(binom) * (x - static_cast<std::size_t>(i) + 1) /
                                     static_cast<unsigned>(i);
            binom = next > kSaturated ? kSaturated : static_cast<std::uint64_t>(next);
        }
        if (i > 0) pow2 = sat_mul(pow2, 2);
        sum = sat_add(sum, sat_mul(binom, pow2));
    }
    return sat_add(x, sat_mul(static_cast<std::uint64_t>(std::max(ell, 0LL)), sum));
}

ReduceResult reduce(const Graph& g, const VertexSet& x, long long ell, int c) {
    const int n = g.order();
    for (Vertex v : x)
        if (v < 0 || v >= n) throw PreconditionError("reduce: cover contains an invalid vertex");
    if (!is_vertex_cover(g, x)) throw PreconditionError("reduce: X is not a vertex cover");
    if (ell < 0 || c < 0) throw PreconditionError("reduce: ell and c must be non-negative");

    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v)
        if (!x.contains(v)) outside.push_back(v);
    const std::vector<Vertex>& xs = x.items();
    const int top = std::min<int>(c, static_cast<int>(xs.size()));
    if (top > 63) throw RangeError("reduce: c above 63 is not supported");

    std::vector<char> marked(static_cast<std::size_t>(n), 0);
    ReduceReport report;
    report.ell = ell;
    report.c = c;

    // Y is a list of indices into xs, enumerated by size then lexicographically.
    // Every outside vertex lands in exactly one split of Y, keyed by N(w) ∩ Y.
    std::vector<int> idx;
    for (int size = 0; size <= top; ++size) {
        idx.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            ++report.subsets;
            std::map<std::uint64_t, MarkGroup> buckets;
            for (Vertex w : outside) {
                std::uint64_t key = 0;
                for (int i = 0; i < size; ++i)
                    if (g.adjacent(w, xs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])])) key |= std::uint64_t{1} << i;
                auto& group = buckets[key];
                if (group.candidates++ < ell) {
                    ++group.marked;
                    marked[static_cast<std::size_t>(w)] = 1;
                }
            }
            for (auto& [key, group] : buckets) {
                std::vector<Vertex> plus, minus;
                for (int i = 0; i < size; ++i)
                    ((key >> i) & 1 ? plus : minus).push_back(xs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
                group.plus = VertexSet(std::move(plus));
                group.minus = VertexSet(std::move(minus));
                report.groups.push_back(std::move(group));
            }
            // Advance to the next size-`size` combination.
            int i = size - 1;
            const int m = static_cast<int>(xs.size());
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    std::vector<Vertex> kept(xs.begin(), xs.end());
    for (Vertex w : outside)
        if (marked[static_cast<std::size_t>(w)]) kept.push_back(w);
    report.kept = VertexSet(std::move(kept));
    report.bound = reduce_bound(xs.size(), ell, c);
    return ReduceResult{induced_subgraph(g, report.kept), std::move(report)};
}

}  // namespace vck
