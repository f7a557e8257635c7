#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "vck/graph.hpp"
#include "json.hpp"

namespace vck {

enum class Problem {
    deletion,
    largest_induced,
    partition,
    clique_minor,
    biclique_induced,
    induced_path,
    induced_matching,
    minor_test,
    perfect_code,
    hamiltonian_st,
    bipartite_biclique,
    psi_test,
    independent_set,
};

std::string_view problem_name(Problem p);
// Throws InputError on an unknown tag.
Problem problem_from_name(std::string_view name);
// deletion, largest-induced and partition carry a property.
bool is_meta_problem(Problem p);

// Targets per problem:
//   deletion k, largest-induced k (copies for packing properties), partition q,
//   clique-minor t, biclique-induced s and t (an induced K_{s,t}), induced-path k, induced-matching k,
//   perfect-code k (sides: terminals, code candidates), hamiltonian-st s and t
//   (vertex ids), bipartite-biclique k (sides A, B), psi-test s and t,
//   independent-set k. minor-test uses the query graph.
struct Instance {
    Problem problem = Problem::deletion;
    Graph graph;
    std::optional<VertexSet> cover;
    std::map<std::string, long long> targets;
    std::optional<std::string> property;
    std::optional<Graph> query;
    VertexSet side_a;
    VertexSet side_b;

    // Throws InputError when the target is absent.
    long long target(const std::string& name) const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

// Checks ids, cover validity, non-negative targets, required fields and that
// a property is present exactly for the meta-problems. Throws InputError.
void validate_instance(const Instance& inst);

constexpr int kInstanceFormatVersion = 1;

nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::ordered_json& j);

// Indented JSON with scalar arrays kept on one line, plus a trailing newline.
std::string pretty_json(const nlohmann::ordered_json& j);

// Pretty-printed JSON document with a trailing newline.
std::string serialize_instance(const Instance& inst);
// Throws InputError on malformed documents (validation is separate).
Instance parse_instance(std::string_view text);

}  // namespace vck
