#include "vck/properties.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "vck/bits.hpp"
#include "vck/errors.hpp"
#include "vck/named_graphs.hpp"
#include "vck/oracles.hpp"
#include "vck/structures.hpp"

namespace vck {

long long WitnessBound::operator()(long long n) const {
    long long best = 0;
    for (const auto& c : polys) {
        long long value = 0, power = 1;
        for (long long coeff : c) {
            value += coeff * power;
            power *= n;
        }
        best = std::max(best, value);
    }
    return best;
}

std::string WitnessBound::describe() const {
    std::ostringstream out;
    if (polys.size() > 1) out << "max(";
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) out << ", ";
        bool any = false;
        for (std::size_t d = 0; d < polys[i].size(); ++d) {
            long long c = polys[i][d];
            if (c == 0) continue;
            if (any) out << " + ";
            any = true;
            if (d == 0 || c != 1) out << c;
            if (d >= 1) out << "n";
            if (d >= 2) out << "^" << d;
        }
        if (!any) out << 0;
    }
    if (polys.size() > 1) out << ")";
    return out.str();
}

WitnessBound WitnessBound::poly(std::vector<long long> coeffs) {
    for (long long c : coeffs)
        if (c < 0) throw PropertyError("witness bound coefficients must be non-negative");
    return WitnessBound{{std::move(coeffs)}};
}

WitnessBound WitnessBound::max(const WitnessBound& a, const WitnessBound& b) {
    WitnessBound out = a;
    for (const auto& c : b.polys)
        if (std::find(out.polys.begin(), out.polys.end(), c) == out.polys.end()) out.polys.push_back(c);
    return out;
}

WitnessBound WitnessBound::sum(const WitnessBound& a, const WitnessBound& b) {
    WitnessBound out;
    for (const auto& x : a.polys)
        for (const auto& y : b.polys) {
            std::vector<long long> c(std::max(x.size(), y.size()), 0);
            for (std::size_t i = 0; i < x.size(); ++i) c[i] += x[i];
            for (std::size_t i = 0; i < y.size(); ++i) c[i] += y[i];
            out.polys.push_back(std::move(c));
        }
    return out;
}

std::optional<VertexSet> PropertySpec::min_witness(const Graph& g) const {
    auto found = find_witness(g);
    if (!found) return std::nullopt;
    VertexSet w = *found;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (Vertex v : w) {
            VertexSet rest = w;
            rest.erase(v);
            auto sub = induced_subgraph(g, rest);
            if (auto inner = find_witness(sub.graph)) {
                w = sub.to_original(*inner);
                shrunk = true;
                break;
            }
        }
    }
    return w;
}

namespace {

VertexSet cycle_set(const std::vector<Vertex>& c) { return VertexSet(c); }

// Predecessor and successor of v on a cyclic order.
VertexSet cyclic_neighbours(const std::vector<Vertex>& order, Vertex v, bool cyclic) {
    auto it = std::find(order.begin(), order.end(), v);
    if (it == order.end()) return {};
    std::size_t i = static_cast<std::size_t>(it - order.begin());
    std::vector<Vertex> out;
    if (i > 0) out.push_back(order[i - 1]);
    else if (cyclic) out.push_back(order.back());
    if (i + 1 < order.size()) out.push_back(order[i + 1]);
    else if (cyclic) out.push_back(order.front());
    return VertexSet(std::move(out));
}

// For upward-closed properties: if G - v is still a member, v needs no protection.
bool member_without(const PropertySpec& p, const Graph& g, Vertex v) {
    return p.member(delete_vertices(g, VertexSet{v}).graph);
}

std::function<std::optional<VertexSet>(const Graph&)> whole_graph_if_member(std::function<bool(const Graph&)> member) {
    return [member](const Graph& g) -> std::optional<VertexSet> {
        if (g.order() > 0 && member(g)) return all_vertices(g);
        return std::nullopt;
    };
}

OracleLimits generous() { return OracleLimits{64, 64}; }

}  // namespace

PropertySpec k2_property() {
    PropertySpec p;
    p.name = "k2";
    p.c_pi = 1;
    p.p = WitnessBound::poly({2});
    p.has_edge_guarantee = true;
    p.upward_closed = true;
    p.member = [](const Graph& g) { return g.size() > 0; };
    p.find_witness = [](const Graph& g) -> std::optional<VertexSet> {
        if (g.size() == 0) return std::nullopt;
        auto e = g.edges().front();
        return VertexSet{e.u, e.v};
    };
    p.adjacency_witness = [](const Graph& g, Vertex v) -> std::optional<VertexSet> {
        if (g.size() == 0) return std::nullopt;
        if (g.size() > static_cast<std::size_t>(g.degree(v))) return VertexSet{};
        return VertexSet{g.neighbors(v).front()};
    };
    p.largest_member = whole_graph_if_member(p.member);
    return p;
}

PropertySpec odd_cycle_property() {
    PropertySpec p;
    p.name = "odd-cycle";
    p.c_pi = 2;
    p.p = WitnessBound::poly({0, 2});
    p.has_edge_guarantee = true;
    p.upward_closed = true;
    p.member = [](const Graph& g) { return !is_bipartite(g); };
    p.find_witness = [](const Graph& g) -> std::optional<VertexSet> {
        auto c = shortest_odd_cycle(g);
        if (!c) return std::nullopt;
        return cycle_set(*c);
    };
    PropertySpec copy = p;
    p.adjacency_witness = [copy](const Graph& g, Vertex v) -> std::optional<VertexSet> {
        if (!copy.member(g)) return std::nullopt;
        if (member_without(copy, g, v)) return VertexSet{};
        return cyclic_neighbours(*shortest_odd_cycle(g), v, true);
    };
    p.largest_member = whole_graph_if_member(p.member);
    return p;
}

PropertySpec chordless_cycle_property(int min_length) {
    if (min_length < 4) throw PropertyError("chordless-cycle length must be at least 4");
    PropertySpec p;
    p.name = min_length == 4 ? "chordless-cycle" : "chordless-cycle-ge:" + std::to_string(min_length);
    p.c_pi = min_length - 1;
    p.p = WitnessBound::poly({0, 2});
    p.has_edge_guarantee = true;
    p.upward_closed = true;
    if (min_length == 4) {
        p.member = [](const Graph& g) { return !is_chordal(g); };
    } else {
        p.member = [min_length](const Graph& g) { return chordless_cycle(g, min_length).has_value(); };
    }
    p.find_witness = [min_length](const Graph& g) -> std::optional<VertexSet> {
        auto c = chordless_cycle(g, min_length);
        if (!c) return std::nullopt;
        return cycle_set(*c);
    };
    PropertySpec copy = p;
    p.adjacency_witness = [copy, min_length](const Graph& g, Vertex v) -> std::optional<VertexSet> {
        if (!copy.member(g)) return std::nullopt;
        if (member_without(copy, g, v)) return VertexSet{};
        // Every long induced cycle passes through v. Protect its predecessor
        // and the next min_length - 2 vertices.
        auto c = *chordless_cycle(g, min_length);
        auto it = std::find(c.begin(), c.end(), v);
        std::rotate(c.begin(), it, c.end());
        std::vector<Vertex> d{c.back()};
        for (int i = 1; i <= min_length - 2; ++i) d.push_back(c[static_cast<std::size_t>(i)]);
        return VertexSet(std::move(d));
    };
    p.largest_member = whole_graph_if_member(p.member);
    return p;
}

PropertySpec f_minor_property(std::vector<Graph> family, std::string name) {
    if (family.empty()) throw PropertyError("f-minor needs at least one graph");
    PropertySpec p;
    p.name = std::move(name);
    int max_order = 0, max_deg = 0;
    bool edgeless_member = false;
    for (const auto& h : family) {
        if (h.order() == 0) throw PropertyError("f-minor family contains the empty graph");
        max_order = std::max(max_order, h.order());
        max_deg = std::max(max_deg, h.max_degree());
        if (h.size() == 0) edgeless_member = true;
    }
    p.c_pi = max_deg;
    p.p = WitnessBound::poly({max_order, max_deg + 1});
    p.has_edge_guarantee = !edgeless_member;
    p.upward_closed = true;
    p.family = family;
    auto find_model = [family](const Graph& g) -> std::optional<std::pair<std::size_t, MinorModel>> {
        for (std::size_t i = 0; i < family.size(); ++i)
            if (auto m = find_minor(g, family[i], generous())) return std::make_pair(i, *m);
        return std::nullopt;
    };
    p.member = [find_model](const Graph& g) { return find_model(g).has_value(); };
    p.find_witness = [find_model](const Graph& g) -> std::optional<VertexSet> {
        auto found = find_model(g);
        if (!found) return std::nullopt;
        VertexSet w;
        for (const auto& bs : found->second.branch_sets) w = set_union(w, bs);
        return w;
    };
    PropertySpec copy = p;
    p.adjacency_witness = [copy, find_model, family](const Graph& g, Vertex v) -> std::optional<VertexSet> {
        auto found = find_model(g);
        if (!found) return std::nullopt;
        if (member_without(copy, g, v)) return VertexSet{};
        auto pruned = prune_minor_model(g, family[found->first], found->second);
        auto it = std::find(pruned.original.begin(), pruned.original.end(), v);
        if (it == pruned.original.end()) return VertexSet{};
        std::vector<Vertex> d;
        for (Vertex w : pruned.graph.neighbors(static_cast<Vertex>(it - pruned.original.begin())))
            d.push_back(pruned.original[static_cast<std::size_t>(w)]);
        return VertexSet(std::move(d));
    };
    p.largest_member = whole_graph_if_member(p.member);
    return p;
}

PropertySpec hamiltonian_cycle_property() {
    PropertySpec p;
    p.name = "hamiltonian-cycle";
    p.c_pi = 2;
    p.p = WitnessBound::poly({0, 2});
    p.has_edge_guarantee = true;
    p.bounded_members = true;
    p.member = [](const Graph& g) { return hamiltonian_cycle(g).has_value(); };
    // A shortest cycle is chordless, so it induces a cycle.
    p.find_witness = [](const Graph& g) -> std::optional<VertexSet> {
        auto c = shortest_cycle(g);
        if (!c) return std::nullopt;
        return cycle_set(*c);
    };
    p.adjacency_witness = [](const Graph& g, Vertex v) -> std::optional<VertexSet> {
        auto c = hamiltonian_cycle(g);
        if (!c) return std::nullopt;
        return cyclic_neighbours(*c, v, true);
    };
    p.largest_member = [](const Graph& g) -> std::optional<VertexSet> {
        auto c = longest_cycle(g);
        if (c.empty()) return std::nullopt;
        return cycle_set(c);
    };
    return p;
}

PropertySpec hamiltonian_path_property() {
    PropertySpec p;
    p.name = "hamiltonian-path";
    p.c_pi = 2;
    // A path on 2m+1 vertices has vertex cover m, so 2n would undercount by one.
    p.p = WitnessBound::poly({1, 2});
    p.has_edge_guarantee = false;
    p.bounded_members = true;
    p.member = [](const Graph& g) { return hamiltonian_path(g).has_value(); };
    p.find_witness = [](const Graph& g) -> std::optional<VertexSet> {
        if (g.order() == 0) return std::nullopt;
        return VertexSet{0};
    };
    p.adjacency_witness = [](const Graph& g, Vertex v) -> std::optional<VertexSet> {
        auto path = hamiltonian_path(g);
        if (!path) return std::nullopt;
        return cyclic_neighbours(*path, v, false);
    };
    p.largest_member = [](const Graph& g) -> std::optional<VertexSet> {
        auto path = longest_path(g);
        if (path.empty()) return std::nullopt;
        return VertexSet(path);
    };
    return p;
}

PropertySpec packing_property(const Graph& h, std::string name) {
    if (h.order() == 0) throw PropertyError("packing of the empty graph");
    PropertySpec p;
    p.name = std::move(name);
    p.c_pi = h.max_degree();
    p.p = WitnessBound::poly({0, h.order()});
    p.has_edge_guarantee = h.size() > 0;
    p.bounded_members = h.size() > 0;
    p.packing_unit = h.order();
    p.family = {h};
    p.member = [h](const Graph& g) { return perfect_packing(g, h).has_value(); };
    p.find_witness = [h](const Graph& g) { return subgraph_copy(g, h); };
    p.adjacency_witness = [h](const Graph& g, Vertex v) -> std::optional<VertexSet> {
        auto packing = perfect_packing(g, h);
        if (!packing) return std::nullopt;
        for (const auto& copy : *packing) {
            if (!copy.contains(v)) continue;
            auto sub = induced_subgraph(g, copy);
            auto emb = *subgraph_embedding(sub.graph, h);
            Vertex local = static_cast<Vertex>(std::lower_bound(sub.original.begin(), sub.original.end(), v) -
                                               sub.original.begin());
            auto x = static_cast<Vertex>(std::find(emb.begin(), emb.end(), local) - emb.begin());
            std::vector<Vertex> d;
            for (Vertex y : h.neighbors(x)) d.push_back(sub.original[static_cast<std::size_t>(emb[static_cast<std::size_t>(y)])]);
            return VertexSet(std::move(d));
        }
        return std::nullopt;
    };
    p.largest_member = [h](const Graph& g) -> std::optional<VertexSet> {
        auto copies = max_packing(g, h);
        if (copies.empty()) return std::nullopt;
        VertexSet all;
        for (const auto& c : copies) all = set_union(all, c);
        return all;
    };
    return p;
}

PropertySpec contains_cycle_property() {
    PropertySpec p;
    p.name = "contains-cycle";
    p.c_pi = 2;
    p.p = WitnessBound::poly({0, 2});
    p.has_edge_guarantee = true;
    p.upward_closed = true;
    p.member = [](const Graph& g) {
        // At least n edges forces a cycle.
        return g.size() >= static_cast<std::size_t>(g.order()) ? g.order() > 0 : shortest_cycle(g).has_value();
    };
    p.find_witness = [](const Graph& g) -> std::optional<VertexSet> {
        auto c = shortest_cycle(g);
        if (!c) return std::nullopt;
        return cycle_set(*c);
    };
    PropertySpec copy = p;
    p.adjacency_witness = [copy](const Graph& g, Vertex v) -> std::optional<VertexSet> {
        if (!copy.member(g)) return std::nullopt;
        if (member_without(copy, g, v)) return VertexSet{};
        return cyclic_neighbours(*shortest_cycle(g), v, true);
    };
    p.largest_member = whole_graph_if_member(p.member);
    return p;
}

PropertySpec union_props(const PropertySpec& a, const PropertySpec& b) {
    PropertySpec p;
    p.name = "(" + a.name + ")|(" + b.name + ")";
    p.c_pi = std::max(a.c_pi, b.c_pi);
    p.p = WitnessBound::max(a.p, b.p);
    p.has_edge_guarantee = a.has_edge_guarantee && b.has_edge_guarantee;
    p.bounded_members = a.bounded_members && b.bounded_members;
    p.upward_closed = a.upward_closed && b.upward_closed;
    p.member = [a, b](const Graph& g) { return a.member(g) || b.member(g); };
    p.find_witness = [a, b](const Graph& g) -> std::optional<VertexSet> {
        auto wa = a.min_witness(g);
        auto wb = b.min_witness(g);
        if (wa && (!wb || wa->size() <= wb->size())) return wa;
        return wb;
    };
    if (a.adjacency_witness && b.adjacency_witness) {
        p.adjacency_witness = [a, b](const Graph& g, Vertex v) -> std::optional<VertexSet> {
            if (a.member(g)) return a.adjacency_witness(g, v);
            return b.adjacency_witness(g, v);
        };
    }
    if (a.largest_member && b.largest_member) {
        p.largest_member = [a, b](const Graph& g) -> std::optional<VertexSet> {
            auto la = a.largest_member(g);
            auto lb = b.largest_member(g);
            if (la && (!lb || la->size() >= lb->size())) return la;
            return lb;
        };
    }
    return p;
}

PropertySpec intersect_props(const PropertySpec& a, const PropertySpec& b) {
    PropertySpec p;
    p.name = "(" + a.name + ")&(" + b.name + ")";
    p.c_pi = a.c_pi + b.c_pi;
    // Not a proven witness bound for intersections in general; see README.
    p.p = WitnessBound::sum(a.p, b.p);
    p.has_edge_guarantee = a.has_edge_guarantee || b.has_edge_guarantee;
    p.bounded_members = a.bounded_members || b.bounded_members;
    p.upward_closed = a.upward_closed && b.upward_closed;
    p.member = [a, b](const Graph& g) { return a.member(g) && b.member(g); };
    auto member = p.member;
    // Smallest member by exhaustive search, smallest size first.
    p.find_witness = [member](const Graph& g) -> std::optional<VertexSet> {
        const int n = g.order();
        if (n > kSubsetDpLimit) throw CeilingExceeded("intersection witness search limited to 24 vertices");
        for (int size = 1; size <= n; ++size) {
            std::vector<char> pick(static_cast<std::size_t>(n), 0);
            std::fill(pick.end() - size, pick.end(), 1);
            do {
                std::vector<Vertex> s;
                for (Vertex v = 0; v < n; ++v)
                    if (pick[static_cast<std::size_t>(v)]) s.push_back(v);
                VertexSet set(std::move(s));
                if (member(induced_subgraph(g, set).graph)) return set;
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
        return std::nullopt;
    };
    if (a.adjacency_witness && b.adjacency_witness) {
        p.adjacency_witness = [a, b](const Graph& g, Vertex v) -> std::optional<VertexSet> {
            auto da = a.adjacency_witness(g, v);
            auto db = b.adjacency_witness(g, v);
            if (!da || !db) return std::nullopt;
            return set_union(*da, *db);
        };
    }
    return p;
}

namespace {

PropertySpec builtin_atom(std::string_view text) {
    auto colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    auto need_arg = [&] {
        if (arg.empty()) throw PropertyError("property '" + std::string(head) + "' needs a parameter");
    };
    auto no_arg = [&] {
        if (colon != std::string_view::npos)
            throw PropertyError("property '" + std::string(head) + "' takes no parameter");
    };
    if (head == "k2") return no_arg(), k2_property();
    if (head == "odd-cycle") return no_arg(), odd_cycle_property();
    if (head == "chordless-cycle") return no_arg(), chordless_cycle_property(4);
    if (head == "hamiltonian-cycle") return no_arg(), hamiltonian_cycle_property();
    if (head == "hamiltonian-path") return no_arg(), hamiltonian_path_property();
    if (head == "contains-cycle") return no_arg(), contains_cycle_property();
    if (head == "chordless-cycle-ge") {
        need_arg();
        int l = 0;
        try {
            l = std::stoi(std::string(arg));
        } catch (const std::exception&) {
            throw PropertyError("bad cycle length '" + std::string(arg) + "'");
        }
        return chordless_cycle_property(l);
    }
    if (head == "f-minor") {
        need_arg();
        std::vector<Graph> family;
        std::size_t pos = 0;
        while (pos <= arg.size()) {
            auto comma = arg.find(',', pos);
            if (comma == std::string_view::npos) comma = arg.size();
            family.push_back(named_graph(arg.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return f_minor_property(std::move(family), std::string(text));
    }
    if (head == "packing" || head == "perfect-h-packing") {
        need_arg();
        return packing_property(named_graph(arg), "packing:" + std::string(arg));
    }
    throw PropertyError("unknown property '" + std::string(text) + "'");
}

struct PropertyParser {
    std::string_view s;
    std::size_t pos = 0;

    PropertySpec expr() {
        PropertySpec left = term();
        while (pos < s.size() && s[pos] == '|') {
            ++pos;
            left = union_props(left, term());
        }
        return left;
    }
    PropertySpec term() {
        PropertySpec left = atom();
        while (pos < s.size() && s[pos] == '&') {
            ++pos;
            left = intersect_props(left, atom());
        }
        return left;
    }
    PropertySpec atom() {
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            PropertySpec inner = expr();
            if (pos >= s.size() || s[pos] != ')') throw PropertyError("unbalanced parentheses in property");
            ++pos;
            return inner;
        }
        std::size_t start = pos;
        while (pos < s.size() && s[pos] != '|' && s[pos] != '&' && s[pos] != ')') ++pos;
        if (pos == start) throw PropertyError("empty property name");
        return builtin_atom(s.substr(start, pos - start));
    }
};

}  // namespace

PropertySpec parse_property(std::string_view text) {
    PropertyParser parser{text};
    PropertySpec p = parser.expr();
    if (parser.pos != text.size()) throw PropertyError("trailing input in property '" + std::string(text) + "'");
    return p;
}

bool check_adjacency_characterization(const PropertySpec& p, const Graph& g, Vertex v, int trials,
                                      std::uint64_t seed) {
    if (!p.adjacency_witness) throw PropertyError(p.name + " has no adjacency witness");
    if (!p.member(g)) throw PreconditionError("check_adjacency_characterization: graph is not a member");
    auto d = p.adjacency_witness(g, v);
    if (!d) throw PropertyError(p.name + ": no adjacency witness for a member graph");
    if (static_cast<int>(d->size()) > p.c_pi)
        throw PropertyError(p.name + ": adjacency witness of size " + std::to_string(d->size()) + " exceeds c=" +
                            std::to_string(p.c_pi));
    std::vector<Vertex> free;
    for (Vertex w = 0; w < g.order(); ++w)
        if (w != v && !d->contains(w)) free.push_back(w);

    auto flipped = [&](const std::vector<char>& flip) {
        GraphBuilder b(g);
        for (std::size_t i = 0; i < free.size(); ++i) {
            if (!flip[i]) continue;
            if (g.adjacent(v, free[i])) b.remove_edge(v, free[i]);
            else b.add_edge(v, free[i]);
        }
        return b.build();
    };

    std::vector<char> flip(free.size(), 0);
    if (free.size() < 31 && (std::uint64_t{1} << free.size()) <= static_cast<std::uint64_t>(trials)) {
        for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << free.size()); ++pattern) {
            for (std::size_t i = 0; i < free.size(); ++i) flip[i] = (pattern >> i) & 1;
            if (!p.member(flipped(flip))) return false;
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        for (auto& f : flip) f = static_cast<char>(rng() & 1);
        if (!p.member(flipped(flip))) return false;
    }
    return true;
}

}  // namespace vck
