#include "bestreply/online.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

#include "bestreply/allocation.hpp"

namespace bestreply {

namespace {

double load_of(const std::map<std::string, double>& loads, const std::string& id) {
    auto it = loads.find(id);
    return it == loads.end() ? 0.0 : it->second;
}

// sum_r w * c_r(load_r + w), accumulated in the allocation's stored order
double marginal_of(const Instance& inst, const std::map<std::string, double>& loads,
                   const std::vector<std::string>& alloc, double w) {
    double sum = 0.0;
    for (const std::string& r : alloc)
        sum += w * inst.resources.at(r).eval(load_of(loads, r) + w);
    return sum;
}

std::vector<std::string> sorted_ids(const std::vector<std::string>& alloc) {
    std::vector<std::string> s = alloc;
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

StepResult best_reply_step(const Instance& inst, const std::map<std::string, double>& loads,
                           const Request& req, TieBreak policy) {
    if (inst.mode != Mode::Explicit)
        throw std::logic_error("best_reply_step: use shortest_path_best_reply in network mode");
    if (req.allocations.empty()) throw ValidationError("request with empty allocation list");

    std::vector<double> marginals;
    marginals.reserve(req.allocations.size());
    double best = std::numeric_limits<double>::infinity();
    for (const auto& alloc : req.allocations) {
        marginals.push_back(marginal_of(inst, loads, alloc, req.weight));
        best = std::min(best, marginals.back());
    }

    // unweighted marginals compare exactly; weighted ones within 1e-12
    // relative of the minimum count as tied
    const double tol = inst.unweighted() ? 0.0 : 1e-12 * std::max(1.0, best);

    int pick = -1;
    if (policy == TieBreak::FirstInList) {
        for (std::size_t i = 0; i < marginals.size(); ++i)
            if (marginals[i] - best <= tol) { pick = static_cast<int>(i); break; }
    } else {
        std::vector<std::string> pick_key;
        for (std::size_t i = 0; i < marginals.size(); ++i) {
            if (marginals[i] - best > tol) continue;
            std::vector<std::string> key = sorted_ids(req.allocations[i]);
            if (pick < 0 || key < pick_key) {
                pick = static_cast<int>(i);
                pick_key = std::move(key);
            }
        }
    }
    return {pick, marginals[pick]};
}

std::vector<std::string> shortest_path_best_reply(const Instance& inst,
                                                  const std::map<std::string, double>& loads,
                                                  const Request& req) {
    if (inst.mode != Mode::Network)
        throw std::logic_error("shortest_path_best_reply needs a network instance");
    const double w = req.weight;

    // adjacency with per-edge marginals, sorted by (to, edge id) so that the
    // first of two parallel equal-cost edges (smaller id) is kept
    std::map<std::string, std::vector<std::tuple<std::string, std::string, double>>> adj;
    for (const NetworkEdge& e : inst.edges)
        adj[e.from].emplace_back(e.to, e.id, w * e.cost.eval(load_of(loads, e.id) + w));
    for (auto& [u, out] : adj) std::sort(out.begin(), out.end());

    // Dijkstra; ties in the queue pop in lexicographic node order, and
    // relaxation is strict, so the result is deterministic
    std::map<std::string, double> dist;
    std::map<std::string, std::pair<std::string, std::string>> pred; // node -> (prev, edge)
    std::set<std::pair<double, std::string>> queue;
    std::set<std::string> settled;
    dist[req.source] = 0.0;
    queue.insert({0.0, req.source});
    while (!queue.empty()) {
        const auto [du, u] = *queue.begin();
        queue.erase(queue.begin());
        settled.insert(u);
        if (u == req.target) break;
        for (const auto& [v, eid, m] : adj[u]) {
            if (settled.count(v)) continue;
            const double nd = du + m;
            auto it = dist.find(v);
            if (it == dist.end() || nd < it->second) {
                if (it != dist.end()) queue.erase({it->second, v});
                dist[v] = nd;
                pred[v] = {u, eid};
                queue.insert({nd, v});
            }
        }
    }
    if (!settled.count(req.target))
        throw ValidationError("no path from \"" + req.source + "\" to \"" + req.target + "\"");

    std::vector<std::string> path;
    for (std::string at = req.target; at != req.source; at = pred[at].first)
        path.push_back(pred[at].second);
    std::reverse(path.begin(), path.end());
    return path;
}

OnlineRun run_online(const Instance& inst, TieBreak policy) {
    OnlineRun run;
    std::map<std::string, double>& loads = run.allocation.loads;
    for (const auto& [id, cost] : inst.resources) loads[id] = 0.0;

    for (const Request& req : inst.requests) {
        std::vector<std::string> choice;
        if (inst.mode == Mode::Explicit) {
            const StepResult step = best_reply_step(inst, loads, req, policy);
            choice = req.allocations[step.choice_index];
            run.step_marginals.push_back(step.marginal);
        } else {
            choice = shortest_path_best_reply(inst, loads, req);
            run.step_marginals.push_back(marginal_of(inst, loads, choice, req.weight));
        }
        for (const std::string& r : choice) loads[r] += req.weight;
        run.allocation.choices.push_back(std::move(choice));
    }

    run.alg_cost = total_cost(inst, run.allocation);
    return run;
}

} // namespace bestreply
