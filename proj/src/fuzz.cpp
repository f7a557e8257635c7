#include "vck/fuzz.hpp"

#include <algorithm>
#include <map>

#include "vck/errors.hpp"
#include "vck/kernels.hpp"
#include "vck/random.hpp"
#include "vck/solve.hpp"

namespace vck {

using json = nlohmann::ordered_json;

namespace {

struct Shape {
    Problem problem;
    std::string property;  // empty for non-meta problems
    int q = 0;             // partition classes
    int c = 0;             // biclique small side
};

Shape pipeline_shape(std::string_view name) {
    const std::string s(name);
    if (s == "deletion:k2") return {Problem::deletion, "k2"};
    if (s == "deletion:odd-cycle") return {Problem::deletion, "odd-cycle"};
    if (s == "deletion:chordless-cycle") return {Problem::deletion, "chordless-cycle"};
    if (s == "deletion:f-minor:K3") return {Problem::deletion, "f-minor:K3"};
    if (s == "largest-induced:hamiltonian-cycle") return {Problem::largest_induced, "hamiltonian-cycle"};
    if (s == "largest-induced:hamiltonian-path") return {Problem::largest_induced, "hamiltonian-path"};
    if (s == "largest-induced:packing:K2") return {Problem::largest_induced, "packing:K2"};
    if (s == "partition:k2:q2") return {Problem::partition, "k2", 2};
    if (s == "partition:k2:q3") return {Problem::partition, "k2", 3};
    if (s == "partition:contains-cycle:q2") return {Problem::partition, "contains-cycle", 2};
    if (s == "clique-minor") return {Problem::clique_minor, ""};
    if (s == "biclique:c1") return {Problem::biclique_induced, "", 0, 1};
    if (s == "biclique:c2") return {Problem::biclique_induced, "", 0, 2};
    throw InputError("unknown fuzz pipeline '" + s + "'");
}

Instance random_instance(const Shape& shape, Rng& rng) {
    const int n = rng.uniform(4, 14);
    const int x = rng.uniform(1, std::min(4, n - 1));
    static constexpr double kDensity[] = {0.25, 0.5, 0.75};
    auto planted = planted_cover_graph(n, x, kDensity[rng.uniform(0, 2)], rng);
    Instance inst;
    inst.problem = shape.problem;
    inst.graph = std::move(planted.graph);
    inst.cover = std::move(planted.cover);
    if (!shape.property.empty()) inst.property = shape.property;
    switch (shape.problem) {
        case Problem::deletion:
            inst.targets["k"] = rng.uniform(0, x);
            break;
        case Problem::largest_induced:
            if (shape.property == "packing:K2")
                inst.targets["k"] = rng.uniform(0, n / 2);
            else
                inst.targets["k"] = rng.uniform(shape.property == "hamiltonian-cycle" ? 3 : 1, n);
            break;
        case Problem::partition:
            inst.targets["q"] = shape.q;
            break;
        case Problem::clique_minor:
            inst.targets["t"] = rng.uniform(1, std::min(x + 2, 7));
            break;
        case Problem::biclique_induced:
            inst.targets["s"] = shape.c;
            inst.targets["t"] = rng.uniform(1, n - shape.c);
            break;
        default:
            break;
    }
    return inst;
}

}  // namespace

const std::vector<std::string>& fuzz_pipelines() {
    static const std::vector<std::string> names{
        "deletion:k2",
        "deletion:odd-cycle",
        "deletion:chordless-cycle",
        "deletion:f-minor:K3",
        "largest-induced:hamiltonian-cycle",
        "largest-induced:hamiltonian-path",
        "largest-induced:packing:K2",
        "partition:k2:q2",
        "partition:k2:q3",
        "partition:contains-cycle:q2",
        "clique-minor",
        "biclique:c1",
        "biclique:c2",
    };
    return names;
}

FuzzSummary fuzz_pipeline(std::string_view pipeline, std::uint64_t seed, int count, const OracleLimits& limits) {
    const Shape shape = pipeline_shape(pipeline);
    FuzzSummary out;
    out.pipeline = std::string(pipeline);
    out.seed = seed;
    std::map<std::string, int> outcomes;
    for (int i = 0; i < count; ++i) {
        FuzzCase fc;
        fc.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
        Rng rng(fc.seed);
        fc.instance = random_instance(shape, rng);
        const Instance& inst = fc.instance;
        out.vertices_in += inst.graph.order();
        bool within_bound = true;
        if (shape.problem == Problem::biclique_induced) {
            const int c = shape.c, t = static_cast<int>(inst.target("t"));
            fc.original = find_induced_biclique(inst.graph, c, t, limits).has_value();
            auto form = compress_biclique(inst.graph, *inst.cover, t, c);
            fc.outcome = std::string(compressed_kind_name(form.kind));
            fc.kernel = evaluate_compressed(form, limits);
            if (form.kind == CompressedForm::Kind::small_instance) {
                out.vertices_out += form.instance->graph.order();
                within_bound = static_cast<std::uint64_t>(form.instance->graph.order()) <= form.size_bound;
            } else {
                for (const auto& e : form.entries) out.vertices_out += e.graph.order();
            }
        } else {
            fc.original = solve_instance(inst, limits).yes;
            auto kr = kernelize(inst);
            fc.outcome = std::string(verdict_name(kr.verdict));
            if (kr.verdict == Verdict::reduced) {
                fc.kernel = solve_instance(*kr.instance, limits).yes;
                out.vertices_out += kr.instance->graph.order();
                within_bound = static_cast<std::uint64_t>(kr.instance->graph.order()) <= kr.size_bound;
            } else {
                fc.kernel = kr.verdict == Verdict::trivial_yes;
            }
        }
        ++outcomes[fc.outcome];
        ++out.count;
        if (fc.original) ++out.yes;
        if (!within_bound) ++out.bound_violations;
        if (fc.original != fc.kernel) {
            ++out.mismatches;
            out.failures.push_back(std::move(fc));
        }
    }
    out.outcomes.assign(outcomes.begin(), outcomes.end());
    return out;
}

json fuzz_summary_json(const FuzzSummary& s) {
    json j;
    j["pipeline"] = s.pipeline;
    j["seed"] = s.seed;
    j["count"] = s.count;
    j["yes"] = s.yes;
    j["mismatches"] = s.mismatches;
    j["bound-violations"] = s.bound_violations;
    j["vertices-in"] = s.vertices_in;
    j["vertices-out"] = s.vertices_out;
    json outcomes = json::object();
    for (const auto& [name, n] : s.outcomes) outcomes[name] = n;
    j["outcomes"] = std::move(outcomes);
    json failures = json::array();
    for (const auto& f : s.failures) failures.push_back(json{{"seed", f.seed}, {"original", f.original}, {"kernel", f.kernel}});
    j["failures"] = std::move(failures);
    return j;
}

}  // namespace vck
