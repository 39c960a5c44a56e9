// Acceptance gate: nine numbered criteria, each printed as one PASS/FAIL
// line with its runtime against a pinned limit. Exit code is the number of
// failed criteria. Run a single criterion with --criterion N.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bestreply/bounds.hpp"
#include "bestreply/csvio.hpp"
#include "bestreply/instance.hpp"
#include "bestreply/offline.hpp"
#include "bestreply/online.hpp"
#include "bestreply/search.hpp"
#include "bestreply/smoothness.hpp"

using namespace bestreply;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(const std::string& msg) {
        pass = false;
        details.push_back(msg);
    }
    void note(const std::string& msg) { details.push_back(msg); }
    void require(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
};

std::string num(double v) { return fmt_double(v); }

// ---- C1: Lambert-W round trip --------------------------------------------

Outcome criterion1() {
    Outcome o;
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 10.0;
        worst = std::max(worst, std::fabs(lambert_w(x * std::exp(x)) - x));
    }
    o.require(worst <= 1e-10,
              "max round-trip error " + num(worst) + " exceeds 1e-10");
    return o;
}

// ---- C2: Psi values and interval -----------------------------------------

Outcome criterion2() {
    Outcome o;
    const double psi1 = psi(1);
    o.require(std::fabs(psi1 - (1.0 + std::sqrt(3.0))) <= 1e-9,
              "psi(1) = " + num(psi1) + " misses 1+sqrt(3)");
    for (int d = 1; d <= 50; ++d) {
        const double r = d / lambert_w(d / (d + 1.0));
        const double v = psi(d);
        if (!(v >= r - 1.0 && v <= r)) {
            o.fail("psi(" + std::to_string(d) + ") = " + num(v) +
                   " outside [" + num(r - 1.0) + ", " + num(r) + "]");
            break;
        }
    }
    return o;
}

// ---- C3: Xi values, intervals, monotonicity ------------------------------

Outcome criterion3() {
    Outcome o;

    int outside = 0;
    double first_xi = 0.0, first_lo = 0.0, first_hi = 0.0;
    for (int d = 2; d <= 50; ++d) {
        const double lo = 1.0 / lambert_w((1.27 * d - 1.0) / (d + 1.0));
        const double hi = 1.0 / lambert_w((1.20 * d - 1.0) / (d + 1.0));
        const double v = xi(d);
        if (!(v >= lo && v <= hi)) {
            if (outside == 0) {
                first_xi = v;
                first_lo = lo;
                first_hi = hi;
            }
            ++outside;
        }
    }
    if (outside > 0) {
        o.fail("xi_d outside [1/W((1.27d-1)/(d+1)), 1/W((1.20d-1)/(d+1))] "
               "for " + std::to_string(outside) + " of 49 degrees");
        o.note("example d=2: xi = " + num(first_xi) + ", required interval [" +
               num(first_lo) + ", " + num(first_hi) + "]");
        // diagnostic: the same constants without the -1 shift do bracket it
        const double alt_lo = 1.0 / lambert_w(1.27 * 2 / 3.0);
        const double alt_hi = 1.0 / lambert_w(1.20 * 2 / 3.0);
        o.note("for comparison, d=2 interval without the -1 shift: [" +
               num(alt_lo) + ", " + num(alt_hi) + "] contains it");
        o.note("measured: xi_d sits strictly below the shifted interval for "
               "every d in 2..50; the root of the defining equation is "
               "bracketed by the unshifted constants instead");
    }

    const double tail = xi(10000);
    o.require(std::fabs(tail - 1.523) <= 0.01,
              "xi(10000) = " + num(tail) + " misses 1.523 +/- 0.01");

    for (int d = 2; d < 50; ++d) {
        if (!(xi(d + 1) < xi(d))) {
            o.fail("xi not strictly decreasing at d=" + std::to_string(d));
            break;
        }
        if (!((d + 1) * xi(d + 1) > d * xi(d))) {
            o.fail("d*xi_d not strictly increasing at d=" + std::to_string(d));
            break;
        }
    }
    if (o.pass) return o;
    if (std::fabs(tail - 1.523) <= 0.01)
        o.note("limit value and both monotonicity sub-checks pass");
    return o;
}

// ---- C4: integrated inequality grid + falsification sensitivity ----------

Outcome criterion4() {
    Outcome o;
    for (int d = 2; d <= 8; ++d) {
        ViolationReport rep = check_unweighted_inequality(d, 50, 50);
        o.require(rep.ok(), "true-parameter run at d=" + std::to_string(d) +
                                " has " + std::to_string(rep.violations.size()) +
                                " violations");
    }
    if (o.pass) o.note("true-parameter runs: zero violations for d in 2..8");

    std::vector<int> insensitive;
    for (int d = 2; d <= 8; ++d) {
        const double probe = (1.0 - 1.0 / d) - 0.1;
        ViolationReport rep =
            check_unweighted_inequality(d, 50, 50, std::nullopt, probe);
        if (rep.ok()) insensitive.push_back(d);
    }
    if (!insensitive.empty()) {
        o.fail("falsified run at mu_d - 0.1 reports zero violations for " +
               std::to_string(insensitive.size()) +
               " of 7 degrees (required: >= 1 violation each)");
        // measure how far mu has to drop before the grid notices
        std::string floors = "measured falsification floors (largest mu with "
                             "a violation on the 50x50 grid):";
        for (int d = 2; d <= 8; ++d) {
            double lo = 0.0, hi = 1.0 - 1.0 / d;
            for (int it = 0; it < 40; ++it) {
                const double mid = 0.5 * (lo + hi);
                const bool viol =
                    !check_unweighted_inequality(d, 50, 50, std::nullopt, mid).ok();
                (viol ? lo : hi) = mid;
            }
            char buf[64];
            std::snprintf(buf, sizeof buf, " d=%d: %.4f (mu_d-0.1 = %.4f)", d,
                          lo, 1.0 - 1.0 / d - 0.1);
            floors += buf;
        }
        o.note(floors);
        o.note("every floor sits below mu_d - 0.1, so the requested probe "
               "cannot trip on this grid; a mu near the floor (e.g. "
               "--mu-override 0.2 at d=2) does trip");
    }
    return o;
}

// ---- C5: weighted certificate --------------------------------------------

Outcome criterion5() {
    Outcome o;
    for (int d = 1; d <= 10; ++d) {
        GMaxResult g = verify_g_max(d); // default 1e5 samples
        o.require(std::fabs(g.max_g - g.psi_power) <= 1e-4 * g.psi_power,
                  "g-max at d=" + std::to_string(d) + ": " + num(g.max_g) +
                      " vs " + num(g.psi_power));
        ViolationReport rep = check_weighted_inequality(d);
        o.require(rep.ok(), "weighted inequality at d=" + std::to_string(d) +
                                " has " + std::to_string(rep.violations.size()) +
                                " violations");
    }
    return o;
}

// ---- C6: appendix lemma suite --------------------------------------------

Outcome criterion6() {
    Outcome o;
    auto reports = check_lemma_inequalities(200);
    for (const auto& [key, rep] : reports)
        o.require(rep.ok(), "lemma check \"" + key + "\" has " +
                                std::to_string(rep.violations.size()) +
                                " violations");
    return o;
}

// ---- C7: online/offline oracle suite --------------------------------------

double marginal_oracle(const Instance& inst,
                       const std::map<std::string, double>& loads,
                       const Request& req) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& alloc : req.allocations) {
        double m = 0.0;
        for (const std::string& r : alloc)
            m += req.weight *
                 inst.resources.at(r).eval(loads.at(r) + req.weight);
        best = std::min(best, m);
    }
    return best;
}

Outcome criterion7() {
    Outcome o;
    const double cap1_unweighted = 4.24 + 1e-9;
    const double cap1_weighted = 3.0 + 2.0 * std::sqrt(2.0) + 1e-9;

    for (std::uint64_t seed = 1; seed <= 500 && o.pass; ++seed) {
        GenerateParams p;
        p.num_resources = 2 + static_cast<int>(seed % 5);
        p.num_requests = 1 + static_cast<int>(seed % 8);
        p.max_allocations = 1 + static_cast<int>(seed % 4);
        p.max_degree = 1 + static_cast<int>(seed % 3);
        p.weighted = (seed % 2 == 1);
        p.seed = seed;
        Instance inst = generate_random(p);
        const std::string tag = " (seed " + std::to_string(seed) + ")";

        // (i) every step of the walk matches the enumeration minimum
        OnlineRun run = run_online(inst, TieBreak::FirstInList);
        std::map<std::string, double> loads;
        for (const auto& [id, cost] : inst.resources) loads[id] = 0.0;
        for (std::size_t i = 0; i < inst.requests.size(); ++i) {
            const double oracle = marginal_oracle(inst, loads, inst.requests[i]);
            const double got = run.step_marginals[i];
            const double tol =
                inst.unweighted() ? 0.0 : 1e-12 * std::max(1.0, oracle);
            if (std::fabs(got - oracle) > tol) {
                o.fail("step " + std::to_string(i + 1) + " marginal " +
                       num(got) + " != oracle " + num(oracle) + tag);
                break;
            }
            for (const std::string& r : run.allocation.choices[i])
                loads[r] += inst.requests[i].weight;
        }
        if (!o.pass) break;

        // (ii) branch and bound agrees with exhaustive enumeration
        OptResult exh = optimal_exhaustive(inst);
        OptResult bnb = optimal_bnb(inst);
        const double opt_tol =
            inst.unweighted() ? 0.0 : 1e-12 * std::max(1.0, exh.opt_cost);
        o.require(std::fabs(bnb.opt_cost - exh.opt_cost) <= opt_tol,
                  "bnb " + num(bnb.opt_cost) + " != exhaustive " +
                      num(exh.opt_cost) + tag);

        // (iii) ratio within [1, theoretical bound]
        RatioResult rr = empirical_ratio(inst, TieBreak::FirstInList);
        if (!rr.ratio.has_value()) {
            o.fail("undefined ratio" + tag);
            break;
        }
        o.require(*rr.ratio >= 1.0 - 1e-12,
                  "ratio " + num(*rr.ratio) + " below 1" + tag);
        const int d_eff = std::max(1, inst.max_degree());
        const double bound_log10 =
            inst.unweighted() ? unweighted_upper_bound_log10(d_eff)
                              : weighted_upper_bound(d_eff).psi_power_log10;
        o.require(std::log10(*rr.ratio) <= bound_log10 + 1e-12,
                  "ratio " + num(*rr.ratio) + " above the degree-" +
                      std::to_string(d_eff) + " bound" + tag);
        if (d_eff == 1) {
            const double cap =
                inst.unweighted() ? cap1_unweighted : cap1_weighted;
            o.require(*rr.ratio <= cap,
                      "degree-1 ratio " + num(*rr.ratio) + " above " +
                          num(cap) + tag);
        }
    }
    if (o.pass) o.note("500 instances: per-step oracle, bnb == exhaustive, "
                       "ratio within bounds");
    return o;
}

// ---- C8: network equivalence ----------------------------------------------

Outcome criterion8() {
    Outcome o;
    for (std::uint64_t seed = 1; seed <= 100 && o.pass; ++seed) {
        GenerateParams p;
        p.mode = Mode::Network;
        p.num_resources = 3 + static_cast<int>(seed % 8); // 3..10 nodes
        p.num_requests = 1 + static_cast<int>(seed % 6);
        p.max_degree = 1 + static_cast<int>(seed % 2);
        p.weighted = (seed % 2 == 1);
        p.seed = seed;
        Instance net = generate_random(p);
        Instance expl = expand_network(net);

        OnlineRun a = run_online(net, TieBreak::FirstInList);
        OnlineRun b = run_online(expl, TieBreak::FirstInList);
        const std::string tag = " (seed " + std::to_string(seed) + ")";
        o.require(a.alg_cost == b.alg_cost,
                  "walk cost " + num(a.alg_cost) + " != enumeration cost " +
                      num(b.alg_cost) + tag);
        for (std::size_t i = 0; i < a.step_marginals.size() && o.pass; ++i)
            o.require(a.step_marginals[i] == b.step_marginals[i],
                      "step " + std::to_string(i + 1) + " marginal differs" + tag);
    }
    if (o.pass)
        o.note("100 DAGs: shortest-path walk == path-enumeration walk, "
               "bit for bit");
    return o;
}

// ---- C9: search reproducibility -------------------------------------------

Outcome criterion9() {
    Outcome o;
    SearchConfig cfg; // d=1, unweighted, 4 resources, 6 requests
    cfg.seed = 1;
    cfg.iterations = 10000;

    SearchResult r1 = run_search(cfg);
    SearchResult r2 = run_search(cfg);
    o.require(trace_csv(r1.trace) == trace_csv(r2.trace),
              "two runs with the same seed produced different traces");
    o.require(r1.best_ratio >= 1.5,
              "best ratio " + num(r1.best_ratio) + " below 1.5");
    o.require(r1.best_ratio <= 4.24 + 1e-9,
              "best ratio " + num(r1.best_ratio) + " above 4.24");
    if (o.pass)
        o.note("best ratio " + num(r1.best_ratio) + " over " +
               std::to_string(r1.trace.size()) + " improvements");
    return o;
}

struct Criterion {
    int id;
    const char* label;
    double limit_s;
    std::function<Outcome()> fn;
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "Lambert-W round trip", 1.0, criterion1},
        {2, "Psi closed form and interval", 1.0, criterion2},
        {3, "Xi values, intervals, monotonicity", 5.0, criterion3},
        {4, "integrated inequality grid + falsification probe", 30.0, criterion4},
        {5, "weighted certificate (g-max + real grid)", 30.0, criterion5},
        {6, "appendix lemma suite at grid 200", 30.0, criterion6},
        {7, "online/offline oracle suite, 500 instances", 60.0, criterion7},
        {8, "network equivalence, 100 DAGs", 10.0, criterion8},
        {9, "search reproducibility and ratio window", 60.0, criterion9},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.fn();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (secs > c.limit_s)
            o.fail("runtime " + std::to_string(secs) + " s exceeds limit");
        std::printf("C%d %s  (%.2f s, limit %.0f s)  %s\n", c.id,
                    o.pass ? "PASS" : "FAIL", secs, c.limit_s, c.label);
        for (const std::string& d : o.details)
            std::printf("    - %s\n", d.c_str());
        if (!o.pass) ++failures;
    }
    return failures;
}
