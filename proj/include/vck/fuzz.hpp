#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vck/instance.hpp"
#include "vck/oracles.hpp"

namespace vck {

struct FuzzCase {
    std::uint64_t seed = 0;
    Instance instance;
    bool original = false;  // oracle on the input
    bool kernel = false;    // oracle on the kernel output
    std::string outcome;    // verdict or compressed kind
};

struct FuzzSummary {
    std::string pipeline;
    std::uint64_t seed = 0;
    int count = 0;
    int yes = 0;
    int mismatches = 0;
    int bound_violations = 0;
    long long vertices_in = 0;
    long long vertices_out = 0;
    std::vector<std::pair<std::string, int>> outcomes;  // sorted by name
    std::vector<FuzzCase> failures;
};

// Kernel pipelines exercised by the equivalence fuzzer, e.g. "deletion:k2",
// "partition:k2:q3", "clique-minor", "biclique:c2".
const std::vector<std::string>& fuzz_pipelines();

// Generates `count` planted-cover instances on at most 14 vertices from
// derive_seed(seed, i) and compares the oracle on each input with the oracle
// on the kernel output. Throws InputError on an unknown pipeline.
FuzzSummary fuzz_pipeline(std::string_view pipeline, std::uint64_t seed, int count, const OracleLimits& limits = {});

nlohmann::ordered_json fuzz_summary_json(const FuzzSummary& s);

}  // namespace vck
