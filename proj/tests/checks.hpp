#pragma once

// Property checks shared by the unit tests (small counts) and the acceptance
// binary (full counts). Each returns how many trials ran and how many failed.

#include <cstdint>
#include <string>

namespace checks {

struct Tally {
    long trials = 0;
    long failures = 0;
    long interesting = 0;  // trials where the check had real work to do
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
    void merge(const Tally& o) {
        if (failures == 0 && o.failures > 0) first_failure = o.first_failure;
        trials += o.trials;
        failures += o.failures;
        interesting += o.interesting;
    }
};

// Replacement witnesses survive Reduce(G, X, l, c) for l >= |S| + |P|.
// `interesting` counts trials where the original witness lost a vertex.
Tally preservation_trials(int trials, std::uint64_t seed);

// Instances where the given clique-minor rule (1, 2 or 3) is the one that
// applies; checks its scope and that the K_t-minor answer is kept.
Tally clique_rule_trials(int rule, int trials, std::uint64_t seed);

// Kernel size against (|X|+1)^4 on instances sitting exactly at the Rule 1
// threshold, plus random instances.
Tally clique_bound_probes(int random_trials, std::uint64_t seed);

// Union and intersection constants, and truth tables on every labelled graph
// with at most max_n vertices for two fixed pairs.
Tally combinator_tables(int max_n);

// Pruned minor models: max degree and order bounds.
Tally pruning_trials(int trials, std::uint64_t seed);

// OR-semantics of one composer over every truth vector for r = 1, 2, ..., max_r
// (powers of two), `repeats` random draws per vector. Composers: biclique,
// induced-matching, induced-path-scaled, psi.
Tally composer_or_checks(const std::string& composer, int repeats, std::uint64_t seed, int max_r = 2);

// The explicit solution at full n^3 scale for n = 9, checked directly.
Tally induced_path_full_scale_witness();

}  // namespace checks
