#include "vck/random.hpp"

#include <algorithm>

namespace vck {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_graph(int n, double p, Rng& rng) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.coin(p)) b.add_edge(u, v);
    return b.build();
}

PlantedGraph planted_cover_graph(int n, int x, double p, Rng& rng) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng.engine());
    order.resize(static_cast<std::size_t>(std::clamp(x, 0, n)));
    VertexSet cover(order);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if ((cover.contains(u) || cover.contains(v)) && rng.coin(p)) b.add_edge(u, v);
    return PlantedGraph{b.build(), cover};
}

}  // namespace vck
