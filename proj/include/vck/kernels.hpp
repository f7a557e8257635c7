#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vck/graph.hpp"
#include "vck/instance.hpp"
#include "vck/oracles.hpp"
#include "vck/properties.hpp"
#include "vck/reduce.hpp"

namespace vck {

enum class Verdict { trivial_yes, trivial_no, reduced };
std::string_view verdict_name(Verdict v);

struct KernelResult {
    Verdict verdict = Verdict::reduced;
    std::optional<Instance> instance;  // present iff reduced
    std::uint64_t size_bound = 0;
    std::vector<std::string> trace;
    std::string justification;  // set for trivial verdicts
    std::optional<ReduceReport> report;
    // Original id of every vertex of the output graph.
    std::vector<Vertex> original;
};

// All kernels throw PreconditionError if X is not a vertex cover of G.

// Throws PreconditionError when members may be edgeless, except for families
// with an edgeless member, which are decided directly.
KernelResult kernel_deletion(const Graph& g, const VertexSet& x, int k, const PropertySpec& p);
// k counts vertices, or copies for packing properties.
KernelResult kernel_largest_induced(const Graph& g, const VertexSet& x, int k, const PropertySpec& p);
KernelResult kernel_partition(const Graph& g, const VertexSet& x, int q, const PropertySpec& p);
// Independent set of size k through the vertex-cover dual k' = n - k.
KernelResult kernel_independent_set(const Graph& g, const VertexSet& x, int k);

// Rule 1: a non-adjacent pair in X with more than (|X|+1)^2 common neighbours
// outside X. Rule 2 and 3: the lowest simplicial vertex outside X with degree
// at least (resp. below) t - 1.
std::optional<std::pair<Vertex, Vertex>> clique_fill_candidate(const Graph& g, const VertexSet& x);
std::optional<Vertex> clique_large_simplicial(const Graph& g, const VertexSet& x, int t);
std::optional<Vertex> clique_small_simplicial(const Graph& g, const VertexSet& x, int t);
std::uint64_t clique_minor_bound(std::size_t x);
KernelResult kernel_clique_minor(const Graph& g, const VertexSet& x, int t);

// Dispatch on the instance's problem (deletion, largest-induced, partition,
// clique-minor, independent-set). The instance must carry a cover.
KernelResult kernelize(const Instance& inst);

// Induced K_{c,t} testing, compressed to a verdict, an equivalent smaller
// instance, or an OR of independent-set instances.
struct IndependentSetEntry {
    VertexSet anchor;  // the guessed c-side, original ids
    Graph graph;
    VertexSet cover;
    int target = 0;
};

struct CompressedForm {
    enum class Kind { verdict, small_instance, or_of_independent_set };
    Kind kind = Kind::verdict;
    bool verdict = false;
    std::optional<Instance> instance;
    std::vector<IndependentSetEntry> entries;
    std::vector<std::string> trace;
    std::uint64_t size_bound = 0;
};

std::string_view compressed_kind_name(CompressedForm::Kind k);
std::uint64_t biclique_small_bound(std::size_t x, int c);
CompressedForm compress_biclique(const Graph& g, const VertexSet& x, int t, int c);
bool evaluate_compressed(const CompressedForm& f, const OracleLimits& limits = {});

// Stable JSON shapes for the CLI. The reduce report's mark groups are only
// included when `explain` is set.
nlohmann::ordered_json reduce_report_json(const ReduceReport& r, bool explain);
nlohmann::ordered_json kernel_result_json(const Instance& input, const KernelResult& r, bool explain);
nlohmann::ordered_json compressed_form_json(const Instance& input, const CompressedForm& f);

}  // namespace vck
