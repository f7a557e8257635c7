// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when all
// pass. Counts and tolerances are fixed here so a run is reproducible.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "checks.hpp"
#include "vck/cli.hpp"
#include "vck/fuzz.hpp"
#include "vck/kernels.hpp"
#include "vck/random.hpp"
#include "vck/reduce.hpp"

namespace {

constexpr int kFuzzCount = 500;
constexpr double kFuzzBudgetSeconds = 600.0;
constexpr int kPreservationTrials = 1000;
constexpr int kRuleTrials = 200;
constexpr int kPruningTrials = 200;
constexpr int kCombinatorMaxN = 6;
constexpr int kComposerRepeats = 5;
constexpr int kReduceBoundTrials = 3000;
constexpr std::uint64_t kSeed = 20240611;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  " << detail << std::endl;
    if (!ok) ++failures;
}

std::string tally_text(const checks::Tally& t) {
    std::ostringstream os;
    os << t.trials << " trials, " << t.interesting << " non-trivial, " << t.failures << " failures";
    if (t.failures) os << " (first: " << t.first_failure << ")";
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Fuzz all pipelines; the summary also feeds criterion 2.
struct FuzzTotals {
    long cases = 0, mismatches = 0, reduced_bound_violations = 0, biclique_bound_violations = 0;
    double seconds = 0;
};

FuzzTotals run_fuzz() {
    FuzzTotals out;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& name : vck::fuzz_pipelines()) {
        auto s = vck::fuzz_pipeline(name, kSeed, kFuzzCount);
        out.cases += s.count;
        out.mismatches += s.mismatches;
        (name.rfind("biclique", 0) == 0 ? out.biclique_bound_violations : out.reduced_bound_violations) +=
            s.bound_violations;
        if (s.mismatches) std::cout << "      " << name << ": " << s.mismatches << " mismatches" << std::endl;
    }
    out.seconds = seconds_since(start);
    return out;
}

void criterion1(const FuzzTotals& f) {
    std::ostringstream os;
    os << f.cases << " instances over " << vck::fuzz_pipelines().size() << " pipelines, " << f.mismatches
       << " mismatches, " << f.seconds << " s (budget " << kFuzzBudgetSeconds << " s)";
    report(1, "kernel/oracle equivalence", f.mismatches == 0 && f.seconds < kFuzzBudgetSeconds, os.str());
}

void criterion2(const FuzzTotals& f) {
    using namespace vck;
    // Reduce directly, over a wider range than the fuzz instances.
    long violations = 0;
    for (int i = 0; i < kReduceBoundTrials; ++i) {
        Rng rng(derive_seed(kSeed + 2, static_cast<std::uint64_t>(i)));
        const int n = rng.uniform(2, 60);
        auto planted = planted_cover_graph(n, rng.uniform(1, std::min(6, n - 1)), 0.1 * rng.uniform(1, 9), rng);
        const long long ell = rng.uniform(0, 6);
        const int c = rng.uniform(0, 3);
        auto red = reduce(planted.graph, planted.cover, ell, c);
        if (red.reduced.graph.order() > static_cast<long long>(reduce_bound(planted.cover.size(), ell, c))) ++violations;
    }
    // Closed forms at a few points.
    bool formulas = reduce_bound(3, 2, 1) == 3 + 2 * (1 + 3 * 2) && clique_minor_bound(4) == 625 &&
                    biclique_small_bound(5, 2) == 5 + 5 * 10;
    auto probes = checks::clique_bound_probes(500, kSeed + 3);
    std::ostringstream os;
    os << "reduce: " << kReduceBoundTrials << " direct + fuzz runs, " << violations + f.reduced_bound_violations
       << " violations; clique probes: " << tally_text(probes) << "; biclique small-instance violations: "
       << f.biclique_bound_violations << "; closed forms " << (formulas ? "match" : "DIFFER");
    report(2, "size-bound formulas",
           violations == 0 && f.reduced_bound_violations == 0 && f.biclique_bound_violations == 0 &&
               probes.failures == 0 && formulas,
           os.str());
}

void criterion3() {
    auto t = checks::preservation_trials(kPreservationTrials, kSeed + 4);
    report(3, "replacement witnesses survive reduce", t.failures == 0 && t.trials == kPreservationTrials, tally_text(t));
}

void criterion4() {
    checks::Tally all;
    std::ostringstream os;
    for (const char* c : {"biclique", "induced-matching", "psi", "induced-path-scaled"}) {
        auto t = checks::composer_or_checks(c, kComposerRepeats, kSeed + 5);
        os << c << " " << t.trials << "/" << t.failures << "; ";
        all.merge(t);
    }
    auto full = checks::induced_path_full_scale_witness();
    os << "full-scale path witnesses " << full.trials << "/" << full.failures;
    all.merge(full);
    if (all.failures) os << " (first: " << all.first_failure << ")";
    report(4, "gadget OR semantics (trials/failures)", all.failures == 0, os.str());
}

void criterion5() {
    checks::Tally all;
    std::ostringstream os;
    for (int rule = 1; rule <= 3; ++rule) {
        auto t = checks::clique_rule_trials(rule, kRuleTrials, kSeed + 6);
        os << "rule " << rule << ": " << t.trials << " firings, " << t.failures << " failures; ";
        all.merge(t);
    }
    if (all.failures) os << "first: " << all.first_failure;
    report(5, "clique-minor rule safety", all.failures == 0 && all.trials == 3 * kRuleTrials, os.str());
}

void criterion6() {
    auto t = checks::combinator_tables(kCombinatorMaxN);
    report(6, "closure combinators", t.failures == 0, tally_text(t));
}

void criterion7() {
    auto t = checks::pruning_trials(kPruningTrials, kSeed + 7);
    report(7, "minor model pruning bounds", t.failures == 0 && t.trials == kPruningTrials, tally_text(t));
}

struct Run {
    int code;
    std::string out, err, file;
};

Run run(const std::vector<std::string>& args, const std::filesystem::path& out_file = {}) {
    std::ostringstream out, err;
    Run r;
    r.code = vck::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    if (!out_file.empty()) {
        std::ifstream in(out_file, std::ios::binary);
        r.file.assign(std::istreambuf_iterator<char>(in), {});
    }
    return r;
}

void criterion8() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("vck_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto p = [&](const char* name) { return (dir / name).string(); };

    // Inputs for the commands that read files.
    run({"gen", "random", "--n", "40", "--p", "0.4", "--seed", "7", "--cover-size", "5", "--out", p("g.json")});
    run({"gen", "random", "--n", "12", "--p", "0.3", "--seed", "8", "--cover-size", "4", "--property", "odd-cycle",
         "--k", "2", "--out", p("small.json")});
    {
        std::ofstream(p("b1.json")) << R"({"format-version": 1, "problem": "bipartite-biclique",
          "graph": {"n": 4, "edges": [[0,2],[0,3],[1,2]]}, "targets": {"k": 1},
          "aux": {"side-a": [0,1], "side-b": [2,3]}})";
        std::ofstream(p("b2.json")) << R"({"format-version": 1, "problem": "bipartite-biclique",
          "graph": {"n": 4, "edges": [[0,2],[1,3]]}, "targets": {"k": 1},
          "aux": {"side-a": [0,1], "side-b": [2,3]}})";
    }

    const std::vector<std::vector<std::string>> commands{
        {"gen", "random", "--n", "12", "--p", "0.3", "--seed", "7"},
        {"gen", "random", "--n", "30", "--p", "0.5", "--seed", "11", "--cover-size", "6", "--problem", "clique-minor",
         "--t", "4"},
        {"gen", "psi", "2", "3"},
        {"gen", "gadget", "induced-matching", p("b1.json"), p("b2.json")},
        {"gen", "gadget", "biclique", p("b1.json"), p("b2.json")},
        {"kernelize", p("g.json"), "--explain"},
        {"kernelize", p("small.json")},
        {"solve", p("small.json")},
        {"fuzz", "--seed", "3", "--count", "20"},
        {"fuzz", "--seed", "3", "--count", "20", "--pipeline", "biclique:c2"},
    };
    int differing = 0, errors = 0;
    std::string first;
    for (const auto& cmd : commands) {
        auto a = run(cmd), b = run(cmd);
        std::string joined;
        for (const auto& s : cmd) joined += (joined.empty() ? "" : " ") + s;
        if (a.code >= vck::kExitUsage) {
            ++errors;
            if (first.empty()) first = joined + " exited " + std::to_string(a.code) + ": " + a.err;
        }
        if (a.out != b.out || a.err != b.err || a.code != b.code || a.out.empty()) {
            ++differing;
            if (first.empty()) first = joined;
        }
    }
    // --out writes the same bytes that would go to stdout.
    auto to_file = run({"gen", "random", "--n", "12", "--p", "0.3", "--seed", "7", "--out", p("r.json")}, p("r.json"));
    auto to_stdout = run({"gen", "random", "--n", "12", "--p", "0.3", "--seed", "7"});
    const bool same_file = to_file.file == to_stdout.out;
    fs::remove_all(dir);

    std::ostringstream os;
    os << commands.size() << " commands run twice, " << differing << " differ, " << errors << " errored; --out "
       << (same_file ? "matches stdout" : "DIFFERS from stdout");
    if (!first.empty()) os << " (first: " << first << ")";
    report(8, "CLI determinism", differing == 0 && errors == 0 && same_file, os.str());
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const auto fuzz = run_fuzz();
    criterion1(fuzz);
    criterion2(fuzz);
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << failures << " failing criteria, "
              << seconds_since(start) << " s)" << std::endl;
    return failures ? 1 : 0;
}
