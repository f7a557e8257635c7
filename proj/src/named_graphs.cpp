#include "vck/named_graphs.hpp"

#include <charconv>
#include <numeric>
#include <vector>

#include "vck/errors.hpp"

namespace vck {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    GraphBuilder b(n);
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 0);
    b.add_clique(vs);
    return b.build();
}

Graph complete_bipartite(int a, int c) {
    GraphBuilder b(a + c);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + c; ++v) b.add_edge(u, v);
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw RangeError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph star_graph(int leaves) {
    GraphBuilder b(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

Graph petersen_graph() {
    GraphBuilder b(10);
    for (Vertex v = 0; v < 5; ++v) {
        b.add_edge(v, (v + 1) % 5);
        b.add_edge(v, v + 5);
        b.add_edge(5 + v, 5 + (v + 2) % 5);
    }
    return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& c) {
    GraphBuilder b(a.order() + c.order());
    for (auto e : a.edges()) b.add_edge(e.u, e.v);
    for (auto e : c.edges()) b.add_edge(e.u + a.order(), e.v + a.order());
    return b.build();
}

namespace {

int number(std::string_view s, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || value < 0)
        throw PropertyError("bad graph name '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Graph named_graph(std::string_view name) {
    if (name == "petersen") return petersen_graph();
    if (name.size() < 2) throw PropertyError("bad graph name '" + std::string(name) + "'");
    std::string_view rest = name.substr(1);
    switch (name[0]) {
        case 'K': {
            if (rest.starts_with("n")) return complete_graph(number(rest.substr(1), name));
            auto us = rest.find('_');
            if (us != std::string_view::npos)
                return complete_bipartite(number(rest.substr(0, us), name), number(rest.substr(us + 1), name));
            if (rest.size() == 2) return complete_bipartite(number(rest.substr(0, 1), name), number(rest.substr(1), name));
            return complete_graph(number(rest, name));
        }
        case 'C': return cycle_graph(number(rest, name));
        case 'P': return path_graph(number(rest, name));
        case 'S': return star_graph(number(rest, name));
        case 'E': return empty_graph(number(rest, name));
        default: break;
    }
    throw PropertyError("bad graph name '" + std::string(name) + "'");
}

}  // namespace vck
