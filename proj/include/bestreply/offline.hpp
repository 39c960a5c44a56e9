#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bestreply/allocation.hpp"
#include "bestreply/instance.hpp"
#include "bestreply/online.hpp"

namespace bestreply {

// Thrown when the exhaustive product space (or the per-request path count in
// a network expansion) exceeds its cap. The message points at branch-and-bound.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultEnumCap = 10'000'000; // product-space leaves
inline constexpr std::int64_t kDefaultPathCap = 10'000;     // simple paths per request

struct OptResult {
    double opt_cost = 0.0;
    AllocationVector opt_alloc;
    std::int64_t nodes_explored = 0; // request assignments visited
    bool proven_optimal = true;
};

// Depth-first sweep of the full product space (no pruning); first minimum in
// enumeration order wins ties. Throws CapExceeded before exploring if the
// product of allocation-list sizes exceeds `cap`.
OptResult optimal_exhaustive(const Instance& inst, std::int64_t cap = kDefaultEnumCap);

// Branch-and-bound in arrival order. A greedy dive (cheapest partial-cost
// child per level, ties first-in-list) seeds the incumbent and is not counted
// in nodes_explored; the DFS then prunes nodes whose partial cost already
// reaches the incumbent (partial cost is a valid lower bound because loads
// only grow and x * c(x) is non-decreasing). Exhausting `node_budget` stops
// the search with proven_optimal = false and the best incumbent so far.
OptResult optimal_bnb(const Instance& inst,
                      std::int64_t node_budget = std::numeric_limits<std::int64_t>::max());

// All simple source->target paths as edge-id sequences, DFS order with
// adjacency sorted by (to-node, edge-id). Throws CapExceeded past `cap`.
std::vector<std::vector<std::string>> enumerate_simple_paths(
    const Instance& inst, const std::string& source, const std::string& target,
    std::int64_t cap = kDefaultPathCap);

// Rewrite a network instance as an explicit one whose allocation lists are
// the enumerated simple paths (resource ids = edge ids).
Instance expand_network(const Instance& inst, std::int64_t path_cap = kDefaultPathCap);

enum class ExactMethod { Exhaustive, BranchAndBound };

struct RatioResult {
    double alg = 0.0;
    double opt = 0.0;
    // alg/opt when opt > 0; 1 when alg = opt = 0; empty when opt = 0 < alg.
    std::optional<double> ratio;
};

RatioResult empirical_ratio(const Instance& inst, TieBreak policy,
                            ExactMethod method = ExactMethod::BranchAndBound);

} // namespace bestreply
