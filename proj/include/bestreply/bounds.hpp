#pragma once

#include <string>

namespace bestreply {

// Principal branch of the Lambert W function on x >= 0 (Halley iteration
// seeded at log1p(x), bisection fallback). Residual |W e^W - x| stays within
// 1e-13 * max(1, x). Throws std::domain_error for negative or non-finite x.
double lambert_w(double x);

// Psi_d: unique positive root of (d+1)(x+1)^d = x^(d+1), real d >= 0.
// psi(0) = 1 exactly; psi(1) = 1 + sqrt(3). Bisection on the bracket
// [d/W(d/(d+1)) - 1, d/W(d/(d+1))] with a log-space residual.
double psi(double d);

// Xi_d: unique positive root of
//   d (2x e^(1/x) + x^2 - e^(2/x) - x^2 e^(1/x)) = e^(2/x),
// solved in the equivalent, numerically stable form
//   x^2 e^(-1/x) - x^2 + 2x = e^(1/x) (1 + 1/d).
// Integer d >= 2 (domain error otherwise). The solver bisects on
// [1/W(1.27 d/(d+1)), 1/W(1.20 d/(d+1))], which measurably contains the root
// for every d >= 2 (see BoundReport for both bracket variants).
double xi(int d);

// Root of the variant with linear coefficient (2 - 1/d) instead of 2; used
// by the lemma checkers. Integer d >= 2.
double xi_variant(int d);

struct SmoothnessParamsUnweighted {
    double log10_lambda; // log10 (Xi_d * d)^(d+1)
    double mu;           // 1 - 1/d
};
SmoothnessParamsUnweighted smoothness_params_unweighted(int d); // d >= 2

// log10 of the unweighted competitive-ratio upper bound:
// d = 1 -> log10(4.24); d >= 2 -> log10 d(Xi_d d)^(d+1).
double unweighted_upper_bound_log10(int d);

struct WeightedUpperBound {
    double psi_power_log10;   // (d+1) log10 Psi_d
    double closed_form_log10; // (d+1) log10 (d / W(d/(d+1)))  (>= psi_power)
};
WeightedUpperBound weighted_upper_bound(int d); // d >= 1

// mu-hat = (1/(d+1)) (d/(d+1)) (Psi_d/(Psi_d+1)), always in (0, 1/(d+1)).
double mu_hat(int d); // d >= 1

struct BoundReport {
    int d = 0;
    double psi_value = 0.0;
    double psi_bracket_lo = 0.0, psi_bracket_hi = 0.0;
    // NaN when d < 2:
    double xi_value = 0.0;
    double xi_variant_value = 0.0;
    double mu = 0.0;
    double log10_lambda = 0.0;
    // Both interval variants stated for Xi_d; the statement-constants bracket
    // contains xi_value, the proof-constants bracket is reported as-is.
    double xi_bracket_stmt_lo = 0.0, xi_bracket_stmt_hi = 0.0;
    double xi_bracket_proof_lo = 0.0, xi_bracket_proof_hi = 0.0;
    double log10_upper_unweighted = 0.0;
    double log10_upper_weighted_psi = 0.0;
    double log10_upper_weighted_closed = 0.0;
    double beta = 0.0;            // d + 1
    double mu_hat_value = 0.0;
    double lambert_ratio = 0.0;   // W(d/(d+1))
};
BoundReport bound_report(int d); // d >= 1

} // namespace bestreply
