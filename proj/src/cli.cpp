#include "bestreply/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "bestreply/bounds.hpp"
#include "bestreply/csvio.hpp"
#include "bestreply/instance.hpp"
#include "bestreply/smoothness.hpp"

namespace bestreply::cli {

namespace {

// Route primary output to --out when given; exit 2 if the file won't open.
class OutputTarget {
  public:
    OutputTarget(const std::string& path, std::ostream& fallback)
        : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            use_file_ = true;
        }
    }
    bool ok() const { return !use_file_ || file_.good(); }
    std::ostream& stream() { return use_file_ ? file_ : fallback_; }

  private:
    std::ostream& fallback_;
    std::ofstream file_;
    bool use_file_ = false;
};

const char* kViolationHeader = "kind,d,d_r,x,y,lhs,rhs,gap\n";

void write_violations(std::ostream& os, const std::string& kind,
                      const ViolationReport& rep) {
    for (const Violation& v : rep.violations)
        os << csv_row({kind, std::to_string(v.d), std::to_string(v.d_r),
                       fmt_double(v.x), fmt_double(v.y), fmt_double(v.lhs),
                       fmt_double(v.rhs), fmt_double(v.gap)});
}

void report_summary(std::ostream& err, const std::string& what,
                    const ViolationReport& rep) {
    err << what << ": " << rep.checked_points << " points, "
        << rep.violations.size() << " violations, min gap "
        << fmt_double(rep.min_gap) << "\n";
}

} // namespace

int cmd_bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err) {
    if (args.d_min < 1 || args.d_min > args.d_max || args.d_max > 200) {
        err << "error: d range must satisfy 1 <= d_min <= d_max <= 200\n";
        return 2;
    }
    OutputTarget target(args.out_path, out);
    if (!target.ok()) {
        err << "error: cannot open \"" << args.out_path << "\" for writing\n";
        return 2;
    }
    std::ostream& os = target.stream();
    os << "d,psi,xi,mu,log10_lambda,log10_upper_unweighted,"
          "log10_upper_weighted_psi,log10_upper_weighted_closed,"
          "psi_bracket_lo,psi_bracket_hi,xi_variant,"
          "xi_bracket_stmt_lo,xi_bracket_stmt_hi,"
          "xi_bracket_proof_lo,xi_bracket_proof_hi,"
          "beta,mu_hat,lambert_ratio\n";
    for (int d = args.d_min; d <= args.d_max; ++d) {
        BoundReport r = bound_report(d);
        os << csv_row({std::to_string(r.d), fmt_double(r.psi_value),
                       fmt_double(r.xi_value), fmt_double(r.mu),
                       fmt_double(r.log10_lambda),
                       fmt_double(r.log10_upper_unweighted),
                       fmt_double(r.log10_upper_weighted_psi),
                       fmt_double(r.log10_upper_weighted_closed),
                       fmt_double(r.psi_bracket_lo), fmt_double(r.psi_bracket_hi),
                       fmt_double(r.xi_variant_value),
                       fmt_double(r.xi_bracket_stmt_lo),
                       fmt_double(r.xi_bracket_stmt_hi),
                       fmt_double(r.xi_bracket_proof_lo),
                       fmt_double(r.xi_bracket_proof_hi), fmt_double(r.beta),
                       fmt_double(r.mu_hat_value), fmt_double(r.lambert_ratio)});
    }
    return 0;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
    Instance inst;
    try {
        std::ifstream f(args.instance_path, std::ios::binary);
        if (!f) {
            err << "error: cannot read \"" << args.instance_path << "\"\n";
            return 2;
        }
        std::ostringstream buf;
        buf << f.rdbuf();
        inst = parse_instance(buf.str());
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    RatioResult rr;
    OnlineRun run;
    try {
        run = run_online(inst, args.tiebreak);
        OptResult opt = args.exact == ExactMethod::Exhaustive
                            ? optimal_exhaustive(inst)
                            : optimal_bnb(inst);
        rr.alg = run.alg_cost;
        rr.opt = opt.opt_cost;
        if (rr.opt > 0.0)
            rr.ratio = rr.alg / rr.opt;
        else if (rr.alg == 0.0)
            rr.ratio = 1.0;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const int d_eff = std::max(1, inst.max_degree());
    const double log10_bound = inst.unweighted()
                                   ? unweighted_upper_bound_log10(d_eff)
                                   : weighted_upper_bound(d_eff).psi_power_log10;
    const bool within =
        rr.ratio.has_value() && std::log10(*rr.ratio) <= log10_bound + 1e-12;

    out << "alg " << fmt_double(rr.alg) << "\n";
    out << "opt " << fmt_double(rr.opt) << "\n";
    out << "ratio " << (rr.ratio ? fmt_double(*rr.ratio) : "undefined") << "\n";
    out << "log10_bound " << fmt_double(log10_bound) << "\n";
    out << "within_bound " << (within ? "true" : "false") << "\n";

    if (!args.out_path.empty()) {
        std::ofstream csv(args.out_path, std::ios::binary);
        if (!csv) {
            err << "error: cannot open \"" << args.out_path << "\" for writing\n";
            return 2;
        }
        csv << "step,weight,marginal,resources\n";
        for (std::size_t i = 0; i < run.step_marginals.size(); ++i) {
            std::string joined;
            for (const std::string& r : run.allocation.choices[i]) {
                if (!joined.empty()) joined += ';';
                joined += r;
            }
            csv << csv_row({std::to_string(i + 1),
                            fmt_double(inst.requests[i].weight),
                            fmt_double(run.step_marginals[i]), joined});
        }
    }
    return within ? 0 : 1;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    const bool known = args.kind == "unweighted" || args.kind == "weighted" ||
                       args.kind == "g-max" || args.kind == "lemmas";
    if (!known) {
        err << "error: unknown verify kind \"" << args.kind
            << "\" (expected unweighted, weighted, g-max, or lemmas)\n";
        return 2;
    }
    if (args.d_min > args.d_max) {
        err << "error: d range must satisfy d_min <= d_max\n";
        return 2;
    }
    OutputTarget target(args.out_path, out);
    if (!target.ok()) {
        err << "error: cannot open \"" << args.out_path << "\" for writing\n";
        return 2;
    }
    std::ostream& os = target.stream();
    os << kViolationHeader;

    std::int64_t total_violations = 0;
    try {
        if (args.kind == "unweighted") {
            const int x_max = args.grid > 0 ? args.grid : args.x_max;
            const int y_max = args.grid > 0 ? args.grid : args.y_max;
            for (int d = args.d_min; d <= args.d_max; ++d) {
                ViolationReport rep = check_unweighted_inequality(
                    d, x_max, y_max, args.lambda_override, args.mu_override);
                write_violations(os, "unweighted", rep);
                report_summary(err, "unweighted d=" + std::to_string(d), rep);
                total_violations += static_cast<std::int64_t>(rep.violations.size());
            }
        } else if (args.kind == "weighted") {
            const int per_axis = args.grid > 0 ? args.grid : 64;
            for (int d = args.d_min; d <= args.d_max; ++d) {
                ViolationReport rep = check_weighted_inequality(
                    d, per_axis, args.lambda_override, args.mu_override);
                write_violations(os, "weighted", rep);
                report_summary(err, "weighted d=" + std::to_string(d), rep);
                total_violations += static_cast<std::int64_t>(rep.violations.size());
            }
        } else if (args.kind == "g-max") {
            const std::int64_t samples = args.grid > 0 ? args.grid : 100000;
            for (int d = args.d_min; d <= args.d_max; ++d) {
                GMaxResult r = verify_g_max(d, std::nullopt, samples);
                const bool in_band = r.max_g <= r.psi_power * (1.0 + 1e-6) &&
                                     r.max_g >= r.psi_power * (1.0 - 1e-4);
                err << "g-max d=" << d << ": max " << fmt_double(r.max_g)
                    << " at z=" << fmt_double(r.at_z) << ", reference "
                    << fmt_double(r.psi_power) << "\n";
                if (!in_band) {
                    os << csv_row({"g-max", std::to_string(d), std::to_string(d),
                                   fmt_double(r.at_z), "0", fmt_double(r.max_g),
                                   fmt_double(r.psi_power),
                                   fmt_double(r.psi_power - r.max_g)});
                    ++total_violations;
                }
            }
        } else { // lemmas
            const int grid = args.grid > 0 ? args.grid : 200;
            auto reports = check_lemma_inequalities(grid);
            for (const auto& [key, rep] : reports) {
                write_violations(os, "lemma-" + key, rep);
                report_summary(err, "lemma " + key, rep);
                total_violations += static_cast<std::int64_t>(rep.violations.size());
            }
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return total_violations == 0 ? 0 : 1;
}

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
    try {
        args.config.validate();
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    SearchResult result = run_search(args.config);
    out << trace_csv(result.trace);
    err << "best ratio " << fmt_double(result.best_ratio) << " (alg "
        << fmt_double(result.best_alg) << ", opt " << fmt_double(result.best_opt)
        << ") after " << result.iterations_run << " iterations\n";

    if (!args.out_path.empty()) {
        std::ofstream f(args.out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot open \"" << args.out_path << "\" for writing\n";
            return 2;
        }
        f << serialize_instance(result.best_instance);
    }
    return 0;
}

} // namespace bestreply::cli
