#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bestreply/instance.hpp"
#include "bestreply/offline.hpp"
#include "bestreply/online.hpp"

namespace bestreply {

struct SearchConfig {
    std::uint64_t seed = 1;
    std::int64_t iterations = 10000;
    int d = 1; // max polynomial degree of generated costs
    int num_resources = 4;
    int num_requests = 6;
    int max_allocations = 2;
    bool weighted = false;
    double mutation_rate = 0.25; // in (0, 1]
    TieBreak tiebreak = TieBreak::FirstInList;
    ExactMethod exact = ExactMethod::BranchAndBound;

    void validate() const; // throws std::domain_error on bad counts/rate
};

struct TracePoint {
    std::int64_t iteration = 0; // 1-based iteration of the improvement
    double best_ratio = 0.0;
    double alg = 0.0;
    double opt = 0.0;
};

struct SearchResult {
    Instance best_instance;
    double best_ratio = 0.0;
    double best_alg = 0.0;
    double best_opt = 0.0;
    std::int64_t iterations_run = 0;
    std::vector<TracePoint> trace; // one point per strict improvement
};

// Randomized hill climbing for high ALG/OPT ratios, deterministic for a
// fixed config: one generator drives the initial instance, every mutation,
// and restart decisions. Each iteration copies the current instance and
// applies local mutations (add/remove a resource from one allocation,
// permute the request order, perturb a weight when weighted); the number of
// mutation applications is driven by
// mutation_rate. The mutant replaces the current instance when its ratio is
// >= the current ratio; the global best is tracked separately and a fresh
// random restart fires after 250 consecutive non-improving iterations.
// Instances with undefined ratio (opt = 0 < alg) are skipped.
SearchResult run_search(const SearchConfig& config);

// Improvement trace as CSV (header iteration,best_ratio,alg,opt).
std::string trace_csv(const std::vector<TracePoint>& trace);

} // namespace bestreply
