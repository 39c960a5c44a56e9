#include "bestreply/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

namespace bestreply {

void recompute_loads(const Instance& inst, AllocationVector& alloc) {
    alloc.loads.clear();
    for (const auto& [id, cost] : inst.resources) alloc.loads[id] = 0.0;
    if (inst.unweighted()) {
        std::map<std::string, std::int64_t> counts;
        for (const auto& choice : alloc.choices)
            for (const std::string& r : choice) ++counts[r];
        for (const auto& [id, n] : counts) alloc.loads[id] = static_cast<double>(n);
    } else {
        for (std::size_t i = 0; i < alloc.choices.size(); ++i)
            for (const std::string& r : alloc.choices[i])
                alloc.loads[r] += inst.requests[i].weight;
    }
}

double total_cost(const Instance& inst, const AllocationVector& alloc) {
    double sum = 0.0;
    for (const auto& [id, cost] : inst.resources) {
        auto it = alloc.loads.find(id);
        const double w = it == alloc.loads.end() ? 0.0 : it->second;
        if (w > 0.0) sum += w * cost.eval(w);
    }
    return sum;
}

void validate_allocation(const Instance& inst, const AllocationVector& alloc) {
    if (alloc.choices.size() != inst.requests.size())
        throw ValidationError("allocation covers a different number of requests");

    for (std::size_t i = 0; i < alloc.choices.size(); ++i) {
        const auto& choice = alloc.choices[i];
        const Request& req = inst.requests[i];
        if (inst.mode == Mode::Explicit) {
            // membership as a set: compare sorted id vectors
            std::vector<std::string> c = choice;
            std::sort(c.begin(), c.end());
            bool member = false;
            for (const auto& a : req.allocations) {
                std::vector<std::string> s = a;
                std::sort(s.begin(), s.end());
                if (s == c) { member = true; break; }
            }
            if (!member)
                throw ValidationError("choice of request " + std::to_string(i + 1) +
                                      " is not one of its allocations");
        } else {
            // must be a source->target walk over existing edges without
            // repeating a node (simple path)
            std::map<std::string, const NetworkEdge*> by_id;
            for (const NetworkEdge& e : inst.edges) by_id[e.id] = &e;
            std::string at = req.source;
            std::set<std::string> visited{at};
            for (const std::string& eid : choice) {
                auto it = by_id.find(eid);
                if (it == by_id.end())
                    throw ValidationError("unknown edge \"" + eid + "\" in a path");
                if (it->second->from != at)
                    throw ValidationError("path of request " + std::to_string(i + 1) +
                                          " breaks at edge \"" + eid + "\"");
                at = it->second->to;
                if (!visited.insert(at).second)
                    throw ValidationError("path of request " + std::to_string(i + 1) +
                                          " revisits node \"" + at + "\"");
            }
            if (at != req.target)
                throw ValidationError("path of request " + std::to_string(i + 1) +
                                      " ends at \"" + at + "\" instead of its target");
        }
    }

    AllocationVector fresh;
    fresh.choices = alloc.choices;
    recompute_loads(inst, fresh);
    for (const auto& [id, w] : fresh.loads) {
        auto it = alloc.loads.find(id);
        const double stored = it == alloc.loads.end() ? 0.0 : it->second;
        const bool exact = inst.unweighted();
        if (exact ? stored != w : std::abs(stored - w) > 1e-12 * std::max(1.0, w))
            throw ValidationError("stored load of \"" + id + "\" does not match its choices");
    }
}

} // namespace bestreply
