#include "vck/instance.hpp"

#include <array>
#include <utility>

#include "vck/errors.hpp"
#include "vck/properties.hpp"

namespace vck {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Problem, std::string_view>, 13> kNames{{
    {Problem::deletion, "deletion"},
    {Problem::largest_induced, "largest-induced"},
    {Problem::partition, "partition"},
    {Problem::clique_minor, "clique-minor"},
    {Problem::biclique_induced, "biclique-induced"},
    {Problem::induced_path, "induced-path"},
    {Problem::induced_matching, "induced-matching"},
    {Problem::minor_test, "minor-test"},
    {Problem::perfect_code, "perfect-code"},
    {Problem::hamiltonian_st, "hamiltonian-st"},
    {Problem::bipartite_biclique, "bipartite-biclique"},
    {Problem::psi_test, "psi-test"},
    {Problem::independent_set, "independent-set"},
}};

std::vector<std::string> required_targets(Problem p) {
    switch (p) {
        case Problem::deletion:
        case Problem::largest_induced:
        case Problem::induced_path:
        case Problem::induced_matching:
        case Problem::perfect_code:
        case Problem::bipartite_biclique:
        case Problem::independent_set:
            return {"k"};
        case Problem::partition:
            return {"q"};
        case Problem::clique_minor:
            return {"t"};
        case Problem::biclique_induced:
        case Problem::hamiltonian_st:
        case Problem::psi_test:
            return {"s", "t"};
        case Problem::minor_test:
            return {};
    }
    return {};
}

void check_ids(const VertexSet& s, int n, const char* what) {
    for (Vertex v : s)
        if (v < 0 || v >= n) throw InputError(std::string(what) + " contains vertex " + std::to_string(v) + " outside the graph");
}

VertexSet set_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of vertex ids");
    std::vector<Vertex> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError(std::string(what) + " must contain integers");
        out.push_back(x.get<Vertex>());
    }
    VertexSet s(out);
    if (s.size() != out.size()) throw InputError(std::string(what) + " contains duplicates");
    return s;
}

json set_to_json(const VertexSet& s) {
    json out = json::array();
    for (Vertex v : s) out.push_back(v);
    return out;
}

}  // namespace

std::string_view problem_name(Problem p) {
    for (const auto& [tag, name] : kNames)
        if (tag == p) return name;
    return "?";
}

Problem problem_from_name(std::string_view name) {
    for (const auto& [tag, text] : kNames)
        if (text == name) return tag;
    throw InputError("unknown problem '" + std::string(name) + "'");
}

bool is_meta_problem(Problem p) {
    return p == Problem::deletion || p == Problem::largest_induced || p == Problem::partition;
}

long long Instance::target(const std::string& name) const {
    auto it = targets.find(name);
    if (it == targets.end()) throw InputError("missing target '" + name + "'");
    return it->second;
}

void validate_instance(const Instance& inst) {
    const int n = inst.graph.order();
    if (inst.cover) {
        check_ids(*inst.cover, n, "cover");
        if (!is_vertex_cover(inst.graph, *inst.cover)) throw InputError("cover does not cover every edge");
    }
    for (const auto& [name, value] : inst.targets)
        if (value < 0) throw InputError("target '" + name + "' is negative");
    for (const auto& name : required_targets(inst.problem)) inst.target(name);
    if (is_meta_problem(inst.problem) != inst.property.has_value())
        throw InputError(is_meta_problem(inst.problem) ? "problem needs a property" : "problem takes no property");
    if (inst.property) {
        try {
            parse_property(*inst.property);
        } catch (const PropertyError& e) {
            throw InputError(e.what());
        }
    }
    if (inst.problem == Problem::minor_test && !inst.query) throw InputError("minor-test needs aux.query");
    check_ids(inst.side_a, n, "aux.side-a");
    check_ids(inst.side_b, n, "aux.side-b");
    if (inst.problem == Problem::perfect_code || inst.problem == Problem::bipartite_biclique) {
        if (inst.side_a.size() + inst.side_b.size() != static_cast<std::size_t>(n) ||
            !set_intersection(inst.side_a, inst.side_b).empty())
            throw InputError("aux sides must partition the vertex set");
    }
    if (inst.problem == Problem::hamiltonian_st) {
        if (inst.target("s") >= n || inst.target("t") >= n) throw InputError("hamiltonian-st endpoint outside the graph");
    }
}

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.order();
    json edges = json::array();
    for (auto e : g.edges()) edges.push_back(json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw InputError("graph needs an integer field 'n'");
    const long long n = j["n"].get<long long>();
    if (n < 0 || n > (1 << 24)) throw InputError("graph size out of range");
    GraphBuilder b(static_cast<int>(n));
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("graph.edges must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw InputError("each edge must be a pair of integers");
            try {
                b.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
            } catch (const RangeError& err) {
                throw InputError(err.what());
            }
        }
    }
    if (j.contains("labels")) {
        const auto& labels = j["labels"];
        if (!labels.is_array() || labels.size() != static_cast<std::size_t>(n))
            throw InputError("graph.labels must have one entry per vertex");
        for (std::size_t v = 0; v < labels.size(); ++v) {
            if (!labels[v].is_string()) throw InputError("labels must be strings");
            b.set_label(static_cast<Vertex>(v), labels[v].get<std::string>());
        }
    }
    return b.build();
}

json instance_to_json(const Instance& inst) {
    json j;
    j["format-version"] = kInstanceFormatVersion;
    j["problem"] = std::string(problem_name(inst.problem));
    j["graph"] = graph_to_json(inst.graph);
    if (inst.cover) j["cover"] = set_to_json(*inst.cover);
    json targets = json::object();
    for (const auto& [name, value] : inst.targets) targets[name] = value;
    j["targets"] = std::move(targets);
    if (inst.property) j["property"] = *inst.property;
    json aux = json::object();
    if (inst.query) aux["query"] = graph_to_json(*inst.query);
    if (!inst.side_a.empty()) aux["side-a"] = set_to_json(inst.side_a);
    if (!inst.side_b.empty()) aux["side-b"] = set_to_json(inst.side_b);
    if (!aux.empty()) j["aux"] = std::move(aux);
    return j;
}

Instance instance_from_json(const json& j) {
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    if (!j.contains("format-version")) throw InputError("missing format-version");
    if (!j["format-version"].is_number_integer() || j["format-version"].get<int>() != kInstanceFormatVersion)
        throw InputError("unsupported format-version");
    if (!j.contains("problem") || !j["problem"].is_string()) throw InputError("missing problem");
    if (!j.contains("graph")) throw InputError("missing graph");
    Instance inst;
    inst.problem = problem_from_name(j["problem"].get<std::string>());
    inst.graph = graph_from_json(j["graph"]);
    if (j.contains("cover")) inst.cover = set_from_json(j["cover"], "cover");
    if (j.contains("targets")) {
        if (!j["targets"].is_object()) throw InputError("targets must be an object");
        for (const auto& [name, value] : j["targets"].items()) {
            if (!value.is_number_integer()) throw InputError("target '" + name + "' must be an integer");
            inst.targets[name] = value.get<long long>();
        }
    }
    if (j.contains("property")) {
        if (!j["property"].is_string()) throw InputError("property must be a string");
        inst.property = j["property"].get<std::string>();
    }
    if (j.contains("aux")) {
        const auto& aux = j["aux"];
        if (!aux.is_object()) throw InputError("aux must be an object");
        if (aux.contains("query")) inst.query = graph_from_json(aux["query"]);
        if (aux.contains("side-a")) inst.side_a = set_from_json(aux["side-a"], "aux.side-a");
        if (aux.contains("side-b")) inst.side_b = set_from_json(aux["side-b"], "aux.side-b");
    }
    return inst;
}

namespace {

bool all_scalars(const json& j) {
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

void write_json(const json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += pad + json(key).dump() + ": ";
            write_json(value, depth + 1, out);
        }
        out += "\n" + close + "}";
    } else if (j.is_array() && !j.empty() && !all_scalars(j)) {
        // Arrays of arrays (edge lists) get one inner array per line.
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += pad;
            write_json(j[i], depth + 1, out);
        }
        out += "\n" + close + "]";
    } else if (j.is_array()) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string pretty_json(const json& j) {
    std::string out;
    write_json(j, 0, out);
    return out + "\n";
}

std::string serialize_instance(const Instance& inst) { return pretty_json(instance_to_json(inst)); }

Instance parse_instance(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed instance document: ") + e.what());
    }
    try {
        return instance_from_json(j);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed instance document: ") + e.what());
    }
}

}  // namespace vck
