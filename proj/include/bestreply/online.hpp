#pragma once

#include <map>
#include <string>
#include <vector>

#include "bestreply/allocation.hpp"
#include "bestreply/instance.hpp"

namespace bestreply {

enum class TieBreak {
    FirstInList,      // earliest allocation in the request's list
    LexResourceSet,   // lexicographically smallest sorted resource-id set
};

struct StepResult {
    int choice_index = -1;
    double marginal = 0.0;
};

struct OnlineRun {
    AllocationVector allocation;
    double alg_cost = 0.0;
    std::vector<double> step_marginals; // chosen marginal per request
};

// One best-reply step in explicit mode: pick the allocation minimizing
// w * sum_r c_r(load_r + w) over the request's list. Unweighted instances
// compare marginals exactly; weighted instances treat values within 1e-12
// relative of the minimum as tied before applying the tie-break policy.
StepResult best_reply_step(const Instance& inst,
                           const std::map<std::string, double>& loads,
                           const Request& req, TieBreak policy);

// Run the one-round best-reply walk from the empty state, requests in
// arrival order. Network instances route each request with
// shortest_path_best_reply. Deterministic for a fixed instance and policy.
OnlineRun run_online(const Instance& inst, TieBreak policy = TieBreak::FirstInList);

// Network-mode best reply: Dijkstra over marginal edge costs
// w * c_e(load_e + w) (all non-negative). Pop ties resolve by lexicographic
// node order and relaxation keeps the earliest edge in (to-node, edge-id)
// order, so parallel equal-cost edges resolve to the smaller edge id.
// Returns the chosen edge-id path in order; throws ValidationError if the
// target is unreachable.
std::vector<std::string> shortest_path_best_reply(
    const Instance& inst, const std::map<std::string, double>& loads, const Request& req);

} // namespace bestreply
