#pragma once

#include <string>
#include <vector>

#include "bestreply/instance.hpp"

namespace bestreply {

// Integer-indexed view of an explicit-mode instance for enumeration-heavy
// loops. Resource index order equals lexicographic id order (std::map).
struct Compiled {
    std::vector<std::string> ids;     // index -> resource id
    std::vector<PolyCost> costs;      // parallel to ids
    std::vector<double> weights;      // per request
    // request -> choice -> resource indices, kept in the allocation's stored
    // order (marginal sums run in that order, part of the determinism story)
    std::vector<std::vector<std::vector<int>>> allocs;
    bool unweighted = false;

    static Compiled from(const Instance& inst); // explicit mode only

    // Marginal cost of `choice` for a request of weight w given loads:
    // sum_r w * c_r(load_r + w), accumulated in stored order.
    double marginal(const std::vector<int>& choice, const std::vector<double>& loads,
                    double w) const;

    // Increase in total cost when a request of weight w joins `choice`:
    // sum_r [(l+w) c_r(l+w) - l c_r(l)]. Non-negative.
    double assign_delta(const std::vector<int>& choice, const std::vector<double>& loads,
                        double w) const;

    void apply(const std::vector<int>& choice, std::vector<double>& loads, double w) const;

    double total_from_loads(const std::vector<double>& loads) const;
};

} // namespace bestreply
