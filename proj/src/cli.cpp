#include "vck/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "vck/errors.hpp"
#include "vck/fuzz.hpp"
#include "vck/gadgets.hpp"
#include "vck/graph_io.hpp"
#include "vck/kernels.hpp"
#include "vck/random.hpp"
#include "vck/solve.hpp"

namespace vck {

using json = nlohmann::ordered_json;

namespace {

struct TargetFlags {
    std::optional<long long> k, t, s, q, c;
};

void add_target_flags(CLI::App* app, TargetFlags& f) {
    app->add_option("--k", f.k, "target k");
    app->add_option("--t", f.t, "target t");
    app->add_option("--s", f.s, "target s");
    app->add_option("--q", f.q, "number of parts");
    app->add_option("--c", f.c, "small biclique side");
}

std::string read_text(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) throw InputError("'" + path + "' is a directory");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << text;
}

struct Loaded {
    Instance instance;
    bool auto_cover = false;
};

// Instance documents start with '{'; anything else is a bare graph in
// edge-list or DIMACS form and needs --problem.
Loaded load_instance(const std::string& path, const std::string& format, const std::string& problem,
                     const std::string& property, const TargetFlags& flags, bool auto_cover) {
    const std::string text = read_text(path);
    Loaded out;
    Instance& inst = out.instance;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        inst = parse_instance(text);
    } else {
        if (problem.empty()) throw InputError("a bare graph needs --problem");
        GraphFormat f = format.empty() ? format_from_path(path) : format_from_name(format);
        try {
            inst.graph = parse_graph(text, f);
        } catch (const ParseError& e) {
            throw InputError(path + ": " + e.what());
        }
    }
    if (!problem.empty()) {
        inst.problem = problem_from_name(problem);
        // Re-targeting a document at a problem without a property drops it.
        if (!is_meta_problem(inst.problem)) inst.property.reset();
    }
    if (!property.empty()) inst.property = property;
    auto set = [&](const char* name, const std::optional<long long>& v) {
        if (v) inst.targets[name] = *v;
    };
    set("k", flags.k);
    set("t", flags.t);
    set("s", flags.s);
    set("q", flags.q);
    set("c", flags.c);
    // The small side of an induced biclique may be given as c.
    if (inst.problem == Problem::biclique_induced && inst.targets.count("c")) {
        inst.targets["s"] = inst.targets["c"];
        inst.targets.erase("c");
    }
    if (!inst.cover) {
        if (!auto_cover) throw InputError("instance has no cover; pass --auto-cover to compute one");
        inst.cover = greedy_vertex_cover(inst.graph);
        out.auto_cover = true;
    }
    validate_instance(inst);
    return out;
}

OracleLimits limits_from(std::optional<int> ceiling) {
    OracleLimits limits;
    if (const char* env = std::getenv(kCeilingEnv)) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0) throw InputError(std::string(kCeilingEnv) + " must be a non-negative integer");
        limits.max_vertices = static_cast<int>(v);
    }
    if (ceiling) limits.max_vertices = *ceiling;
    return limits;
}

int cmd_kernelize(const std::string& path, const std::string& format, const std::string& problem,
                  const std::string& property, const TargetFlags& flags, bool auto_cover, bool explain,
                  const std::string& out_path, std::ostream& out) {
    auto loaded = load_instance(path, format, problem, property, flags, auto_cover);
    const Instance& inst = loaded.instance;
    json report;
    int code;
    if (inst.problem == Problem::biclique_induced) {
        auto form = compress_biclique(inst.graph, *inst.cover, static_cast<int>(inst.target("t")),
                                      static_cast<int>(inst.target("s")));
        report = compressed_form_json(inst, form);
        code = form.kind != CompressedForm::Kind::verdict ? kExitReduced : form.verdict ? kExitYes : kExitNo;
    } else {
        auto kr = kernelize(inst);
        report = kernel_result_json(inst, kr, explain);
        code = kr.verdict == Verdict::reduced ? kExitReduced : kr.verdict == Verdict::trivial_yes ? kExitYes : kExitNo;
    }
    report["auto-cover"] = loaded.auto_cover;
    write_text(out_path, pretty_json(report), out);
    return code;
}

int cmd_solve(const std::string& path, const std::string& format, const std::string& problem,
              const std::string& property, const TargetFlags& flags, bool auto_cover, std::optional<int> ceiling,
              const std::string& out_path, std::ostream& out) {
    auto limits = limits_from(ceiling);
    auto loaded = load_instance(path, format, problem, property, flags, auto_cover);
    auto result = solve_instance(loaded.instance, limits);
    json j;
    j["problem"] = problem_name(loaded.instance.problem);
    j["answer"] = result.yes ? "yes" : "no";
    j["witness"] = result.witness;
    write_text(out_path, pretty_json(j), out);
    return result.yes ? kExitYes : kExitNo;
}

int cmd_fuzz(std::vector<std::string> pipelines, std::uint64_t seed, int count, std::optional<int> ceiling,
             const std::string& dump_dir, const std::string& out_path, std::ostream& out) {
    auto limits = limits_from(ceiling);
    if (pipelines.empty()) pipelines = fuzz_pipelines();
    std::ostringstream text;
    int mismatches = 0, violations = 0, total = 0;
    for (const auto& p : pipelines) {
        auto s = fuzz_pipeline(p, seed, count, limits);
        mismatches += s.mismatches;
        violations += s.bound_violations;
        total += s.count;
        text << fuzz_summary_json(s).dump() << "\n";
        if (!dump_dir.empty())
            for (const auto& f : s.failures) {
                std::filesystem::create_directories(dump_dir);
                std::string name = p;
                for (char& ch : name)
                    if (ch == ':') ch = '_';
                write_text((std::filesystem::path(dump_dir) / (name + "-" + std::to_string(f.seed) + ".json")).string(),
                           serialize_instance(f.instance), out);
            }
    }
    text << json{{"instances", total}, {"mismatches", mismatches}, {"bound-violations", violations}}.dump() << "\n";
    write_text(out_path, text.str(), out);
    return mismatches + violations > 0 ? kExitMismatch : 0;
}

std::vector<Instance> load_all(const std::vector<std::string>& paths) {
    std::vector<Instance> out;
    for (const auto& p : paths) out.push_back(parse_instance(read_text(p)));
    if (out.empty()) throw InputError("no input instances");
    return out;
}

std::vector<BipartiteInput> bipartite_inputs(const std::vector<Instance>& xs) {
    std::vector<BipartiteInput> out;
    for (const auto& x : xs) out.push_back({x.graph, x.side_a, x.side_b, static_cast<int>(x.target("k"))});
    return out;
}

Instance gen_gadget(const std::string& kind, const std::vector<std::string>& paths, std::optional<int> length,
                    std::optional<int> c) {
    auto inputs = load_all(paths);
    if (kind == "biclique") return compose_biclique(bipartite_inputs(inputs)).instance;
    if (kind == "induced-matching") return compose_induced_matching(bipartite_inputs(inputs)).instance;
    if (kind == "induced-path") {
        std::vector<HamInput> hs;
        for (const auto& x : inputs)
            hs.push_back({x.graph, static_cast<Vertex>(x.target("s")), static_cast<Vertex>(x.target("t"))});
        return compose_induced_path(hs, length).instance;
    }
    if (kind == "psi") {
        std::vector<SplitInput> ss;
        for (const auto& x : inputs) ss.push_back({x.graph, x.side_a, static_cast<int>(x.target("k"))});
        return compose_psi(ss).instance;
    }
    if (inputs.size() != 1) throw InputError(kind + " takes exactly one input instance");
    const Instance& x = inputs.front();
    if (kind == "perfect-code-minor") {
        auto t = perfect_code_to_minor(x.graph, x.side_a, x.side_b, static_cast<int>(x.target("k")));
        if (!t.verdict) return t.instance;
        // Decided directly: a one-vertex host with a one- or two-vertex query.
        Instance canon;
        canon.problem = Problem::minor_test;
        canon.graph = Graph(1);
        canon.cover = VertexSet{};
        canon.query = *t.verdict ? Graph(1) : Graph(2);
        return canon;
    }
    if (kind == "is-biclique") return is_to_biclique_instance(x.graph, static_cast<int>(x.target("k")), c.value_or(1));
    throw InputError("unknown gadget '" + kind + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kernelization by vertex cover: kernels, exact oracles, gadget generators", "vck"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string input, format, problem, property, out_path, dump_dir;
    TargetFlags flags;
    bool auto_cover = false, explain = false;
    std::optional<int> ceiling;

    auto* kern = app.add_subcommand("kernelize", "Run the kernel for an instance");
    kern->add_option("input", input, "instance document or bare graph ('-' for stdin)")->required();
    kern->add_option("--format", format, "edge-list or dimacs for bare graphs");
    kern->add_option("--problem", problem, "problem tag");
    kern->add_option("--property", property, "property expression for meta-problems");
    add_target_flags(kern, flags);
    kern->add_flag("--auto-cover", auto_cover, "compute a greedy cover when none is given");
    kern->add_flag("--explain", explain, "include every mark group of the reduce step");
    kern->add_option("--out", out_path, "write the report here instead of stdout");

    auto* solve = app.add_subcommand("solve", "Decide an instance with the exact oracles");
    solve->add_option("input", input, "instance document or bare graph")->required();
    solve->add_option("--format", format);
    solve->add_option("--problem", problem);
    solve->add_option("--property", property);
    add_target_flags(solve, flags);
    solve->add_flag("--auto-cover", auto_cover);
    solve->add_option("--ceiling", ceiling, "oracle vertex ceiling");
    solve->add_option("--out", out_path);

    std::vector<std::string> pipelines;
    std::uint64_t seed = 1;
    int count = 500;
    auto* fuzz = app.add_subcommand("fuzz", "Kernel/oracle equivalence on random instances");
    fuzz->add_option("--pipeline", pipelines, "pipeline name (repeatable; default all)");
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--count", count)->check(CLI::NonNegativeNumber);
    fuzz->add_option("--ceiling", ceiling);
    fuzz->add_option("--dump", dump_dir, "directory for mismatching instances");
    fuzz->add_option("--out", out_path);

    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->require_subcommand(1);
    int n = 10, cover_size = -1;
    double p = 0.3;
    auto* gen_random = gen->add_subcommand("random", "Random graph instance");
    gen_random->add_option("--n", n)->check(CLI::Range(0, 4096));
    gen_random->add_option("--p", p)->check(CLI::Range(0.0, 1.0));
    gen_random->add_option("--seed", seed);
    gen_random->add_option("--cover-size", cover_size, "plant a cover of this size");
    gen_random->add_option("--problem", problem);
    gen_random->add_option("--property", property);
    add_target_flags(gen_random, flags);
    gen_random->add_option("--out", out_path);

    int psi_s = 0, psi_t = 0;
    auto* gen_psi = gen->add_subcommand("psi", "The anchor graph Psi_{s,t}");
    gen_psi->add_option("s", psi_s)->required()->check(CLI::NonNegativeNumber);
    gen_psi->add_option("t", psi_t)->required()->check(CLI::NonNegativeNumber);
    gen_psi->add_option("--out", out_path);

    std::string kind;
    std::vector<std::string> inputs;
    std::optional<int> length, c_small;
    auto* gen_gadget_cmd = gen->add_subcommand("gadget", "Compose or transform instance files");
    gen_gadget_cmd->add_option("kind", kind, "biclique, induced-path, induced-matching, psi, perfect-code-minor, is-biclique")
        ->required();
    gen_gadget_cmd->add_option("inputs", inputs, "instance files")->required();
    gen_gadget_cmd->add_option("--length", length, "scaled path length for induced-path");
    gen_gadget_cmd->add_option("--c", c_small, "small side for is-biclique");
    gen_gadget_cmd->add_option("--out", out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (kern->parsed())
            return cmd_kernelize(input, format, problem, property, flags, auto_cover, explain, out_path, out);
        if (solve->parsed())
            return cmd_solve(input, format, problem, property, flags, auto_cover, ceiling, out_path, out);
        if (fuzz->parsed()) return cmd_fuzz(pipelines, seed, count, ceiling, dump_dir, out_path, out);
        if (gen_random->parsed()) {
            Rng rng(seed);
            Instance inst;
            if (cover_size >= 0) {
                auto planted = planted_cover_graph(n, cover_size, p, rng);
                inst.graph = std::move(planted.graph);
                inst.cover = std::move(planted.cover);
            } else {
                inst.graph = random_graph(n, p, rng);
                inst.cover = greedy_vertex_cover(inst.graph);
            }
            inst.problem = problem.empty() ? Problem::deletion : problem_from_name(problem);
            if (is_meta_problem(inst.problem)) inst.property = property.empty() ? "k2" : property;
            if (inst.problem == Problem::deletion && !flags.k) flags.k = 1;
            if (flags.k) inst.targets["k"] = *flags.k;
            if (flags.t) inst.targets["t"] = *flags.t;
            if (flags.s) inst.targets["s"] = *flags.s;
            if (flags.q) inst.targets["q"] = *flags.q;
            if (flags.c) inst.targets["s"] = *flags.c;
            validate_instance(inst);
            write_text(out_path, serialize_instance(inst), out);
            return 0;
        }
        if (gen_psi->parsed()) {
            auto psi = make_psi(psi_s, psi_t);
            Instance inst;
            inst.problem = Problem::psi_test;
            inst.graph = psi.graph;
            inst.cover = psi.cover;
            inst.targets["s"] = psi_s;
            inst.targets["t"] = psi_t;
            write_text(out_path, serialize_instance(inst), out);
            return 0;
        }
        if (gen_gadget_cmd->parsed()) {
            write_text(out_path, serialize_instance(gen_gadget(kind, inputs, length, c_small)), out);
            return 0;
        }
    } catch (const CeilingExceeded& e) {
        err << "ceiling: " << e.what() << "\n";
        return kExitCeiling;
    } catch (const InputError& e) {
        err << "input: " << e.what() << "\n";
        return kExitInput;
    } catch (const PropertyError& e) {
        err << "property: " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return kExitInput;
    } catch (const ClassError& e) {
        err << "class: " << e.what() << "\n";
        return kExitInput;
    } catch (const RangeError& e) {
        err << "range: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace vck
