#include "bestreply/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "bestreply/csvio.hpp"
#include "bestreply/rng.hpp"

namespace bestreply {

namespace {

constexpr int kRestartAfter = 250; // consecutive non-improving iterations

void mutate_once(Instance& inst, Rng& rng, bool weighted) {
    const int kinds = weighted ? 4 : 3;
    Request& req = inst.requests[rng.below(inst.requests.size())];
    switch (rng.below(kinds)) {
    case 0: { // add a resource to one allocation
        std::vector<std::string>& alloc =
            req.allocations[rng.below(req.allocations.size())];
        std::vector<std::string> missing;
        for (const auto& [id, cost] : inst.resources)
            if (!std::count(alloc.begin(), alloc.end(), id)) missing.push_back(id);
        if (missing.empty()) return;
        const std::string& pick = missing[rng.below(missing.size())];
        alloc.insert(std::upper_bound(alloc.begin(), alloc.end(), pick), pick);
        return;
    }
    case 1: { // drop a resource from one allocation (never emptying it)
        std::vector<std::string>& alloc =
            req.allocations[rng.below(req.allocations.size())];
        if (alloc.size() < 2) return;
        alloc.erase(alloc.begin() + static_cast<std::ptrdiff_t>(rng.below(alloc.size())));
        return;
    }
    case 2: { // permute the request order (Fisher-Yates)
        for (std::size_t i = inst.requests.size(); i > 1; --i)
            std::swap(inst.requests[i - 1], inst.requests[rng.below(i)]);
        return;
    }
    default: { // rescale one weight, keeping it positive and bounded
        req.weight = std::clamp(req.weight * (0.5 + rng.real01()), 0.05, 100.0);
        return;
    }
    }
}

} // namespace

void SearchConfig::validate() const {
    if (iterations < 1) throw std::domain_error("iterations must be >= 1");
    if (d < 0 || d > kMaxDegree)
        throw std::domain_error("degree must be in [0, " +
                                std::to_string(kMaxDegree) + "]");
    if (num_resources < 1 || num_requests < 1 || max_allocations < 1)
        throw std::domain_error("all instance shape counts must be >= 1");
    if (!(mutation_rate > 0.0) || mutation_rate > 1.0)
        throw std::domain_error("mutation_rate must be in (0, 1]");
}

SearchResult run_search(const SearchConfig& config) {
    config.validate();
    Rng rng(config.seed);

    auto fresh = [&]() {
        GenerateParams p;
        p.mode = Mode::Explicit;
        p.num_resources = config.num_resources;
        p.num_requests = config.num_requests;
        p.max_degree = config.d;
        p.max_allocations = config.max_allocations;
        p.weighted = config.weighted;
        p.seed = rng.next_u64();
        return generate_random(p);
    };

    SearchResult out;
    Instance current;
    double current_ratio = -1.0;
    bool have_best = false;
    int stagnant = 0;

    for (std::int64_t it = 1; it <= config.iterations; ++it) {
        Instance candidate;
        bool is_restart = false;
        if (it == 1 || stagnant >= kRestartAfter) {
            candidate = fresh();
            is_restart = true;
            stagnant = 0;
        } else {
            candidate = current;
            mutate_once(candidate, rng, config.weighted);
            while (rng.real01() < config.mutation_rate)
                mutate_once(candidate, rng, config.weighted);
        }

        RatioResult rr = empirical_ratio(candidate, config.tiebreak, config.exact);
        if (!rr.ratio.has_value()) { // undefined ratio: discard the mutant
            ++stagnant;
            continue;
        }

        const bool improves_best = !have_best || *rr.ratio > out.best_ratio;
        if (improves_best) {
            out.best_instance = candidate;
            out.best_ratio = *rr.ratio;
            out.best_alg = rr.alg;
            out.best_opt = rr.opt;
            out.trace.push_back({it, *rr.ratio, rr.alg, rr.opt});
            have_best = true;
        }
        if (is_restart || *rr.ratio >= current_ratio) {
            current = std::move(candidate);
            current_ratio = *rr.ratio;
        }
        stagnant = improves_best ? 0 : stagnant + 1;
    }
    out.iterations_run = config.iterations;
    return out;
}

std::string trace_csv(const std::vector<TracePoint>& trace) {
    std::string out = "iteration,best_ratio,alg,opt\n";
    for (const TracePoint& p : trace)
        out += csv_row({std::to_string(p.iteration), fmt_double(p.best_ratio),
                        fmt_double(p.alg), fmt_double(p.opt)});
    return out;
}

} // namespace bestreply
