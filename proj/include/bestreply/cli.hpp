#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bestreply/offline.hpp"
#include "bestreply/online.hpp"
#include "bestreply/search.hpp"

// Subcommand implementations, callable in-process for tests. Each returns
// the process exit code: 0 success / no violation, 1 violation or bound
// exceeded, 2 usage or input error. Primary output (CSV or report text)
// goes to `out` unless an --out path redirects it to a file; diagnostics go
// to `err`.
namespace bestreply::cli {

struct BoundsArgs {
    int d_min = 1;
    int d_max = 1;
    std::string out_path; // empty = write CSV to `out`
};
int cmd_bounds(const BoundsArgs& args, std::ostream& out, std::ostream& err);

struct SimulateArgs {
    std::string instance_path;
    TieBreak tiebreak = TieBreak::FirstInList;
    ExactMethod exact = ExactMethod::BranchAndBound;
    std::string out_path; // empty = no per-step CSV
};
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
    std::string kind; // unweighted | weighted | g-max | lemmas
    int d_min = 2;
    int d_max = 2;
    int x_max = 50;
    int y_max = 50;
    int grid = 0; // lemmas: grid_size (default 200); weighted: points/axis
                  // (default 64); g-max: samples (default 1e5);
                  // unweighted: sets both x_max and y_max when > 0
    std::optional<double> lambda_override;
    std::optional<double> mu_override;
    std::string out_path; // empty = write CSV to `out`
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct SearchArgs {
    SearchConfig config;
    std::string out_path; // best-instance file; empty = don't write
};
int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err);

} // namespace bestreply::cli
