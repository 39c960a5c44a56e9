#include "bestreply/compiled.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bestreply {

Compiled Compiled::from(const Instance& inst) {
    if (inst.mode != Mode::Explicit)
        throw std::logic_error("Compiled::from needs an explicit-mode instance");
    Compiled c;
    std::map<std::string, int> index;
    for (const auto& [id, cost] : inst.resources) {
        index[id] = static_cast<int>(c.ids.size());
        c.ids.push_back(id);
        c.costs.push_back(cost);
    }
    c.unweighted = inst.unweighted();
    for (const Request& req : inst.requests) {
        c.weights.push_back(req.weight);
        std::vector<std::vector<int>> lists;
        for (const auto& alloc : req.allocations) {
            std::vector<int> ix;
            for (const std::string& r : alloc) ix.push_back(index.at(r));
            lists.push_back(std::move(ix));
        }
        c.allocs.push_back(std::move(lists));
    }
    return c;
}

double Compiled::marginal(const std::vector<int>& choice, const std::vector<double>& loads,
                          double w) const {
    double sum = 0.0;
    for (int r : choice) sum += w * costs[r].eval(loads[r] + w);
    return sum;
}

double Compiled::assign_delta(const std::vector<int>& choice, const std::vector<double>& loads,
                              double w) const {
    double delta = 0.0;
    for (int r : choice) {
        const double l = loads[r];
        delta += (l + w) * costs[r].eval(l + w) - l * costs[r].eval(l);
    }
    return delta;
}

void Compiled::apply(const std::vector<int>& choice, std::vector<double>& loads,
                     double w) const {
    for (int r : choice) loads[r] += w;
}

double Compiled::total_from_loads(const std::vector<double>& loads) const {
    double sum = 0.0;
    for (std::size_t r = 0; r < loads.size(); ++r)
        if (loads[r] > 0.0) sum += loads[r] * costs[r].eval(loads[r]);
    return sum;
}

} // namespace bestreply
