#include "vck/kernels.hpp"

namespace vck {

using json = nlohmann::ordered_json;

namespace {

json set_json(const VertexSet& s) {
    json out = json::array();
    for (Vertex v : s) out.push_back(v);
    return out;
}

}  // namespace

json reduce_report_json(const ReduceReport& r, bool explain) {
    json j;
    j["ell"] = r.ell;
    j["c"] = r.c;
    j["subsets"] = r.subsets;
    j["groups"] = r.groups.size();
    j["kept"] = r.kept.size();
    j["bound"] = r.bound;
    if (explain) {
        json groups = json::array();
        for (const auto& g : r.groups)
            groups.push_back(json{{"plus", set_json(g.plus)},
                                  {"minus", set_json(g.minus)},
                                  {"candidates", g.candidates},
                                  {"marked", g.marked}});
        j["mark-groups"] = std::move(groups);
    }
    return j;
}

json kernel_result_json(const Instance& input, const KernelResult& r, bool explain) {
    json j;
    j["problem"] = problem_name(input.problem);
    j["verdict"] = verdict_name(r.verdict);
    j["input-vertices"] = input.graph.order();
    j["cover-size"] = input.cover ? input.cover->size() : 0;
    j["output-vertices"] = r.instance ? r.instance->graph.order() : 0;
    j["size-bound"] = r.size_bound;
    if (r.report)
        j["bound-formula"] = "|X| + ell * sum_{i<=c} C(|X|,i) 2^i";
    else if (input.problem == Problem::clique_minor)
        j["bound-formula"] = "(|X|+1)^4";
    if (!r.justification.empty()) j["justification"] = r.justification;
    j["trace"] = r.trace;
    if (r.report) j["reduce"] = reduce_report_json(*r.report, explain);
    if (r.instance) {
        j["original-ids"] = r.original;
        j["instance"] = instance_to_json(*r.instance);
    }
    return j;
}

json compressed_form_json(const Instance& input, const CompressedForm& f) {
    json j;
    j["problem"] = problem_name(input.problem);
    j["kind"] = compressed_kind_name(f.kind);
    j["input-vertices"] = input.graph.order();
    j["cover-size"] = input.cover ? input.cover->size() : 0;
    j["size-bound"] = f.size_bound;
    j["bound-formula"] = "|X| + |X| * C(|X|,c)";
    j["trace"] = f.trace;
    switch (f.kind) {
        case CompressedForm::Kind::verdict:
            j["verdict"] = f.verdict ? "yes" : "no";
            break;
        case CompressedForm::Kind::small_instance:
            j["output-vertices"] = f.instance->graph.order();
            j["instance"] = instance_to_json(*f.instance);
            break;
        case CompressedForm::Kind::or_of_independent_set: {
            json entries = json::array();
            for (const auto& e : f.entries) {
                Instance inst;
                inst.problem = Problem::independent_set;
                inst.graph = e.graph;
                inst.cover = e.cover;
                inst.targets["k"] = e.target;
                entries.push_back(json{{"anchor", set_json(e.anchor)}, {"instance", instance_to_json(inst)}});
            }
            j["entries"] = std::move(entries);
            break;
        }
    }
    return j;
}

}  // namespace vck
