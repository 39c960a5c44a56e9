#include "bestreply/offline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "bestreply/compiled.hpp"

namespace bestreply {

namespace {

// choices as index vector -> AllocationVector on the original instance
AllocationVector materialize(const Instance& inst, const std::vector<int>& picks) {
    AllocationVector alloc;
    for (std::size_t i = 0; i < picks.size(); ++i)
        alloc.choices.push_back(inst.requests[i].allocations[picks[i]]);
    recompute_loads(inst, alloc);
    return alloc;
}

struct Dfs {
    const Compiled& c;
    std::int64_t nodes = 0;
    std::int64_t budget;
    bool budget_hit = false;
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> best_picks;
    std::vector<int> picks;
    std::vector<double> loads;
    bool prune; // branch-and-bound on/off

    Dfs(const Compiled& compiled, std::int64_t node_budget, bool use_prune)
        : c(compiled), budget(node_budget), prune(use_prune) {
        picks.assign(c.weights.size(), 0);
        loads.assign(c.ids.size(), 0.0);
    }

    void run(std::size_t level) {
        if (level == c.weights.size()) {
            const double cost = c.total_from_loads(loads);
            if (cost < best_cost) {
                best_cost = cost;
                best_picks = picks;
            }
            return;
        }
        const double w = c.weights[level];
        for (std::size_t k = 0; k < c.allocs[level].size(); ++k) {
            if (budget_hit) return;
            if (nodes == budget) { budget_hit = true; return; }
            ++nodes;
            const auto& choice = c.allocs[level][k];
            // save/restore instead of subtracting keeps weighted loads exact
            std::vector<double> saved;
            saved.reserve(choice.size());
            for (int r : choice) {
                saved.push_back(loads[r]);
                loads[r] += w;
            }
            picks[level] = static_cast<int>(k);
            if (!prune || c.total_from_loads(loads) < best_cost) run(level + 1);
            for (std::size_t j = choice.size(); j-- > 0;) loads[choice[j]] = saved[j];
        }
    }
};

Instance ensure_explicit(const Instance& inst) {
    return inst.mode == Mode::Explicit ? inst : expand_network(inst);
}

} // namespace

OptResult optimal_exhaustive(const Instance& inst, std::int64_t cap) {
    const Instance expl = ensure_explicit(inst);
    std::int64_t product = 1;
    for (const Request& req : expl.requests) {
        if (req.allocations.empty()) throw ValidationError("request with empty allocation list");
        product *= static_cast<std::int64_t>(req.allocations.size());
        if (product > cap)
            throw CapExceeded("product space above " + std::to_string(cap) +
                              "; use branch-and-bound");
    }

    const Compiled c = Compiled::from(expl);
    Dfs dfs(c, std::numeric_limits<std::int64_t>::max(), /*use_prune=*/false);
    dfs.run(0);

    OptResult r;
    r.nodes_explored = dfs.nodes;
    r.opt_alloc = materialize(expl, dfs.best_picks);
    r.opt_cost = total_cost(expl, r.opt_alloc);
    return r;
}

OptResult optimal_bnb(const Instance& inst, std::int64_t node_budget) {
    if (node_budget < 1) throw std::domain_error("optimal_bnb: node budget must be >= 1");
    const Instance expl = ensure_explicit(inst);
    const Compiled c = Compiled::from(expl);

    // greedy dive seeds the incumbent; its nodes are not counted
    std::vector<int> dive_picks(c.weights.size(), 0);
    {
        std::vector<double> loads(c.ids.size(), 0.0);
        for (std::size_t level = 0; level < c.weights.size(); ++level) {
            if (c.allocs[level].empty())
                throw ValidationError("request with empty allocation list");
            int best_k = 0;
            double best_delta = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < c.allocs[level].size(); ++k) {
                const double delta =
                    c.assign_delta(c.allocs[level][k], loads, c.weights[level]);
                if (delta < best_delta) {
                    best_delta = delta;
                    best_k = static_cast<int>(k);
                }
            }
            dive_picks[level] = best_k;
            for (int r : c.allocs[level][best_k]) loads[r] += c.weights[level];
        }
    }

    Dfs dfs(c, node_budget, /*use_prune=*/true);
    {
        // evaluate the dive incumbent resource-wise, same as any leaf
        std::vector<double> loads(c.ids.size(), 0.0);
        for (std::size_t level = 0; level < c.weights.size(); ++level)
            for (int r : c.allocs[level][dive_picks[level]]) loads[r] += c.weights[level];
        dfs.best_cost = c.total_from_loads(loads);
        dfs.best_picks = dive_picks;
    }
    dfs.run(0);

    OptResult r;
    r.nodes_explored = dfs.nodes;
    r.proven_optimal = !dfs.budget_hit;
    r.opt_alloc = materialize(expl, dfs.best_picks);
    r.opt_cost = total_cost(expl, r.opt_alloc);
    return r;
}

std::vector<std::vector<std::string>> enumerate_simple_paths(const Instance& inst,
                                                             const std::string& source,
                                                             const std::string& target,
                                                             std::int64_t cap) {
    if (inst.mode != Mode::Network)
        throw std::logic_error("enumerate_simple_paths needs a network instance");

    std::map<std::string, std::vector<std::pair<std::string, std::string>>> adj; // (to, edge)
    for (const NetworkEdge& e : inst.edges) adj[e.from].emplace_back(e.to, e.id);
    for (auto& [u, out] : adj) std::sort(out.begin(), out.end());

    std::vector<std::vector<std::string>> paths;
    std::vector<std::string> current;
    std::set<std::string> visited;

    // iterative DFS would be noise at <= 10 nodes; recursion depth = path length
    auto walk = [&](auto&& self, const std::string& at) -> void {
        if (at == target) {
            if (static_cast<std::int64_t>(paths.size()) == cap)
                throw CapExceeded("more than " + std::to_string(cap) + " simple paths");
            paths.push_back(current);
            return;
        }
        visited.insert(at);
        for (const auto& [to, eid] : adj[at]) {
            if (visited.count(to)) continue;
            current.push_back(eid);
            self(self, to);
            current.pop_back();
        }
        visited.erase(at);
    };
    walk(walk, source);
    return paths;
}

Instance expand_network(const Instance& inst, std::int64_t path_cap) {
    if (inst.mode != Mode::Network)
        throw std::logic_error("expand_network needs a network instance");
    Instance out;
    out.mode = Mode::Explicit;
    out.resources = inst.resources; // edge ids become plain resource ids
    for (const Request& req : inst.requests) {
        Request r;
        r.weight = req.weight;
        r.allocations = enumerate_simple_paths(inst, req.source, req.target, path_cap);
        if (r.allocations.empty())
            throw ValidationError("no path from \"" + req.source + "\" to \"" + req.target + "\"");
        out.requests.push_back(std::move(r));
    }
    out.validate();
    return out;
}

RatioResult empirical_ratio(const Instance& inst, TieBreak policy, ExactMethod method) {
    RatioResult res;
    res.alg = run_online(inst, policy).alg_cost;
    res.opt = method == ExactMethod::Exhaustive ? optimal_exhaustive(inst).opt_cost
                                                : optimal_bnb(inst).opt_cost;
    if (res.opt > 0.0)
        res.ratio = res.alg / res.opt;
    else if (res.alg == 0.0)
        res.ratio = 1.0;
    return res;
}

} // namespace bestreply
