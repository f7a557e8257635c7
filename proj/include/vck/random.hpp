#pragma once

#include <cstdint>
#include <random>

#include "vck/graph.hpp"

namespace vck {

// Every random choice in the tool flows through one of these, seeded explicitly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [lo, hi].
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool coin(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p; }
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

// Independent per-item seeds from a base seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

Graph random_graph(int n, double p, Rng& rng);

struct PlantedGraph {
    Graph graph;
    VertexSet cover;
};

// x random vertices form the cover; every pair with at least one endpoint in
// the cover becomes an edge with probability p, so the cover is valid.
PlantedGraph planted_cover_graph(int n, int x, double p, Rng& rng);

}  // namespace vck
