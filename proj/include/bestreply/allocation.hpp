#pragma once

#include <map>
#include <string>
#include <vector>

#include "bestreply/instance.hpp"

namespace bestreply {

// One chosen resource set per request, in arrival order. In network mode a
// choice is the chosen edge-id path in path order (a simple path, so also a
// duplicate-free set).
struct AllocationVector {
    std::vector<std::vector<std::string>> choices;
    std::map<std::string, double> loads; // resource id -> total weight
};

// Rebuild `loads` from `choices`. Unweighted loads are accumulated as exact
// integer counts and converted once at the end, so they never drift.
void recompute_loads(const Instance& inst, AllocationVector& alloc);

// Resource-wise total cost: sum_r w_r(S) * c_r(w_r(S)). Uses alloc.loads.
double total_cost(const Instance& inst, const AllocationVector& alloc);

// Throws ValidationError unless every choice is one of the request's offered
// allocations (explicit mode) or a valid source->target simple path (network
// mode), and loads match a recomputation.
void validate_allocation(const Instance& inst, const AllocationVector& alloc);

} // namespace bestreply
