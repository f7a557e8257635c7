#pragma once

#include <string>

#include "json.hpp"
#include "vck/instance.hpp"
#include "vck/oracles.hpp"

namespace vck {

struct SolveResult {
    bool yes = false;
    // Certificate for a yes answer; null for no.
    nlohmann::ordered_json witness;
};

// Exact answer through the oracles. Every yes witness is re-checked by an
// independent verifier before it is returned (ContractError on failure).
// Throws CeilingExceeded when the instance is above the limits.
SolveResult solve_instance(const Instance& inst, const OracleLimits& limits = {});

// Copy-count targets of packing properties become vertex counts.
long long largest_induced_vertex_target(const Instance& inst);

}  // namespace vck
