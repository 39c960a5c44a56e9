#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "bestreply/cli.hpp"

namespace {

const std::map<std::string, bestreply::TieBreak> kTieBreaks{
    {"first", bestreply::TieBreak::FirstInList},
    {"lex", bestreply::TieBreak::LexResourceSet}};

const std::map<std::string, bestreply::ExactMethod> kExactMethods{
    {"exhaustive", bestreply::ExactMethod::Exhaustive},
    {"bnb", bestreply::ExactMethod::BranchAndBound}};

} // namespace

int main(int argc, char** argv) {
    using namespace bestreply;

    CLI::App app{"best-reply toolkit for resource allocation instances"};
    app.require_subcommand(1);

    cli::BoundsArgs bounds;
    int bounds_d = 0;
    CLI::App* cb = app.add_subcommand("bounds", "bound table as CSV");
    cb->add_option("--d", bounds_d, "single degree (sets both ends)");
    cb->add_option("--d-min", bounds.d_min, "lowest degree");
    cb->add_option("--d-max", bounds.d_max, "highest degree");
    cb->add_option("--out", bounds.out_path, "write CSV here instead of stdout");

    cli::SimulateArgs simulate;
    CLI::App* cs = app.add_subcommand("simulate", "replay one instance file");
    cs->add_option("instance", simulate.instance_path, "instance JSON file")
        ->required();
    cs->add_option("--tiebreak", simulate.tiebreak, "tie-break policy")
        ->transform(CLI::CheckedTransformer(kTieBreaks));
    cs->add_option("--exact", simulate.exact, "offline optimum method")
        ->transform(CLI::CheckedTransformer(kExactMethods));
    cs->add_option("--out", simulate.out_path, "write per-step CSV here");

    cli::VerifyArgs verify;
    int verify_d = 0;
    CLI::App* cv = app.add_subcommand("verify", "grid-check an inequality family");
    cv->add_option("kind", verify.kind,
                   "unweighted | weighted | g-max | lemmas")
        ->required();
    cv->add_option("--d", verify_d, "single degree (sets both ends)");
    cv->add_option("--d-min", verify.d_min, "lowest degree");
    cv->add_option("--d-max", verify.d_max, "highest degree");
    cv->add_option("--grid", verify.grid,
                   "grid size (meaning depends on the kind)");
    cv->add_option("--x-max", verify.x_max, "unweighted: largest x");
    cv->add_option("--y-max", verify.y_max, "unweighted: largest y");
    cv->add_option("--lambda-override", verify.lambda_override,
                   "probe a non-default lambda");
    cv->add_option("--mu-override", verify.mu_override,
                   "probe a non-default mu");
    cv->add_option("--out", verify.out_path, "write violation CSV here");

    cli::SearchArgs search;
    CLI::App* cx = app.add_subcommand("search", "hill-climb for bad ratios");
    cx->add_option("--seed", search.config.seed, "RNG seed");
    cx->add_option("--iters", search.config.iterations, "iteration count");
    cx->add_option("--d", search.config.d, "max cost degree");
    cx->add_option("--num-resources", search.config.num_resources, "resources");
    cx->add_option("--num-requests", search.config.num_requests, "requests");
    cx->add_option("--max-allocations", search.config.max_allocations,
                   "allocations per request");
    cx->add_flag("--weighted", search.config.weighted, "draw request weights");
    cx->add_option("--mutation-rate", search.config.mutation_rate,
                   "chance of stacking another mutation");
    cx->add_option("--tiebreak", search.config.tiebreak, "tie-break policy")
        ->transform(CLI::CheckedTransformer(kTieBreaks));
    cx->add_option("--exact", search.config.exact, "offline optimum method")
        ->transform(CLI::CheckedTransformer(kExactMethods));
    cx->add_option("--out", search.out_path, "write the best instance here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cb->parsed()) {
        if (cb->count("--d")) bounds.d_min = bounds.d_max = bounds_d;
        return cli::cmd_bounds(bounds, std::cout, std::cerr);
    }
    if (cs->parsed()) return cli::cmd_simulate(simulate, std::cout, std::cerr);
    if (cv->parsed()) {
        if (cv->count("--d")) verify.d_min = verify.d_max = verify_d;
        return cli::cmd_verify(verify, std::cout, std::cerr);
    }
    return cli::cmd_search(search, std::cout, std::cerr);
}
