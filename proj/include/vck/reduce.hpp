#pragma once

#include <cstdint>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

// One (Y+, Y-) split with a nonempty candidate set Z: the vertices outside X
// adjacent to all of Y+ and to none of Y-.
struct MarkGroup {
    VertexSet plus;
    VertexSet minus;
    int candidates = 0;
    int marked = 0;
};

struct ReduceReport {
    long long ell = 0;
    int c = 0;
    std::uint64_t subsets = 0;  // number of Y examined, including Y = {}
    std::vector<MarkGroup> groups;
    VertexSet kept;  // original ids: X plus every marked vertex
    std::uint64_t bound = 0;
};

struct ReduceResult {
    InducedSubgraph reduced;
    ReduceReport report;
};

// |X| + ell * sum_{i <= c} C(|X|, i) 2^i, saturating at UINT64_MAX.
std::uint64_t reduce_bound(std::size_t x, long long ell, int c);

// Keeps X and, for every Y ⊆ X with |Y| <= c and every split of Y, the ell
// lowest-id candidates. Throws PreconditionError if X is not a vertex cover.
ReduceResult reduce(const Graph& g, const VertexSet& x, long long ell, int c);

}  // namespace vck
