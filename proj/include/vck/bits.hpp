#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "vck/graph.hpp"

namespace vck {

// Word-sized vertex sets used by the exact solvers, which only ever run on
// graphs with at most 64 vertices.
using Mask = std::uint64_t;

constexpr int kMaskBits = 64;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

template <typename F>
void for_each_bit(Mask m, F&& f) {
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        f(v);
    }
}

// Throws RangeError when g has more than 64 vertices.
std::vector<Mask> adjacency_masks(const Graph& g);

Mask to_mask(const VertexSet& s);
VertexSet from_mask(Mask m);

}  // namespace vck
