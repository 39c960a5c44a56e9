#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bestreply/bounds.hpp"

using namespace bestreply;

namespace {

// Independent oracle: bisection on w e^w = x over [0, max(1, x)].
double lambert_oracle(double x) {
    double lo = 0.0, hi = std::max(1.0, x);
    while (hi * std::exp(hi) < x) hi *= 2.0;
    for (int i = 0; i < 120; ++i) {
        double mid = 0.5 * (lo + hi);
        (mid * std::exp(mid) < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("lambert_w fixed points") {
    CHECK(lambert_w(0.0) == 0.0);
    CHECK(lambert_w(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-13));
    // frozen oracle value for W(1), bisection to 1e-12
    CHECK(std::abs(lambert_w(1.0) - 0.5671432904) < 1e-9);
    CHECK(std::abs(lambert_w(1.0) - lambert_oracle(1.0)) < 1e-10);
    CHECK(std::abs(lambert_w(0.5) - lambert_oracle(0.5)) < 1e-10);
    CHECK(std::abs(lambert_w(7.25) - lambert_oracle(7.25)) < 1e-10);
}

TEST_CASE("lambert_w round trip on 0..10") {
    for (int i = 0; i <= 100; ++i) {
        double x = i / 10.0;
        CHECK(std::abs(lambert_w(x * std::exp(x)) - x) <= 1e-10);
    }
}

TEST_CASE("lambert_w residual and monotonicity across magnitudes") {
    double prev = -1.0;
    for (double x = 1e-6; x < 1e6; x *= 3.7) {
        double w = lambert_w(x);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-13 * std::max(1.0, x));
        CHECK(w > prev);
        prev = w;
    }
    // huge argument goes through the log-form iteration
    double w = lambert_w(1e300);
    CHECK(std::abs(w + std::log(w) - std::log(1e300)) < 1e-12 * std::log(1e300));
}

TEST_CASE("lambert_w rejects bad input") {
    CHECK_THROWS_AS(lambert_w(-1.0), std::domain_error);
    CHECK_THROWS_AS(lambert_w(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(lambert_w(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("psi closed forms") {
    CHECK(psi(0.0) == 1.0);
    // root of 2(x+1) = x^2 is 1 + sqrt(3)
    CHECK(std::abs(psi(1.0) - (1.0 + std::sqrt(3.0))) < 1e-9);
    CHECK_THROWS_AS(psi(-0.5), std::domain_error);
}

TEST_CASE("psi residual small and bracket holds") {
    for (int d = 1; d <= 30; ++d) {
        double p = psi(d);
        double lhs = (d + 1.0) * std::pow(p + 1.0, d);
        double rhs = std::pow(p, d + 1.0);
        CHECK(std::abs(lhs - rhs) / rhs <= 1e-10);
    }
    for (int d = 31; d <= 200; d += 13) {
        double p = psi(d);
        double logres = (d + 1.0) * std::log(p) - d * std::log1p(p) - std::log1p(double(d));
        CHECK(std::abs(logres) <= 1e-10);
    }
    for (double d : {0.5, 1.0, 2.5, 3.0, 10.0, 50.0}) {
        double hi = d / lambert_w(d / (d + 1.0));
        double p = psi(d);
        CHECK(p >= hi - 1.0);
        CHECK(p <= hi);
    }
}

TEST_CASE("xi solves its defining equation, both forms") {
    for (int d = 2; d <= 30; ++d) {
        double x = xi(d);
        // rearranged form used by the solver
        double lhs = x * x * std::exp(-1.0 / x) - x * x + 2.0 * x;
        double rhs = std::exp(1.0 / x) * (1.0 + 1.0 / d);
        CHECK(std::abs(lhs - rhs) / rhs <= 1e-10);
    }
    for (int d = 2; d <= 20; ++d) {
        double x = xi(d);
        // original form, moderate cancellation
        double inner = 2.0 * x * std::exp(1.0 / x) + x * x - std::exp(2.0 / x) -
                       x * x * std::exp(1.0 / x);
        CHECK(std::abs(d * inner - std::exp(2.0 / x)) / std::exp(2.0 / x) <= 1e-9);
    }
    CHECK_THROWS_AS(xi(1), std::domain_error);
    CHECK_THROWS_AS(xi(0), std::domain_error);
    CHECK_THROWS_AS(xi_variant(1), std::domain_error);
}

TEST_CASE("xi limit value at d = 10^4") {
    CHECK(std::abs(xi(10000) - 1.523) <= 0.01);
}

TEST_CASE("xi monotonicity and interval facts for d = 2..50") {
    double prev_xi = std::numeric_limits<double>::infinity();
    double prev_dxi = 0.0;
    double floor_const = 1.0 / lambert_w(1.27);
    for (int d = 2; d <= 50; ++d) {
        double x = xi(d);
        CHECK(x < prev_xi);
        CHECK(d * x > prev_dxi);
        prev_xi = x;
        prev_dxi = d * x;
        CHECK(floor_const + 1.0 / d <= x);

        BoundReport r = bound_report(d);
        // the root sits inside the interval built from the 1.27d/(d+1) and
        // 1.20d/(d+1) arguments ...
        CHECK(r.xi_bracket_stmt_lo <= x);
        CHECK(x <= r.xi_bracket_stmt_hi);
        // ... and, measured fact, strictly below the interval built from the
        // (1.27d-1)/(d+1) and (1.20d-1)/(d+1) arguments at these degrees.
        CHECK(x < r.xi_bracket_proof_lo);
        // the variant root (linear coefficient 2 - 1/d) is strictly larger
        CHECK(r.xi_variant_value > x);
    }
}

TEST_CASE("xi_variant solves the variant equation") {
    for (int d = 2; d <= 30; ++d) {
        double x = xi_variant(d);
        double lhs = x * x * std::exp(-1.0 / x) - x * x + (2.0 - 1.0 / d) * x;
        double rhs = std::exp(1.0 / x) * (1.0 + 1.0 / d);
        CHECK(std::abs(lhs - rhs) / rhs <= 1e-10);
    }
}

TEST_CASE("smoothness parameters") {
    CHECK(smoothness_params_unweighted(2).mu == 0.5);
    CHECK(smoothness_params_unweighted(4).mu == 0.75);
    CHECK_THROWS_AS(smoothness_params_unweighted(1), std::domain_error);
    // lambda/(1-mu) = d * lambda in log10 equals the unweighted bound
    for (int d = 2; d <= 50; ++d) {
        auto sp = smoothness_params_unweighted(d);
        double implied = sp.log10_lambda - std::log10(1.0 - sp.mu);
        CHECK(std::abs(implied - unweighted_upper_bound_log10(d)) <= 1e-12 * std::abs(implied));
    }
}

TEST_CASE("upper bounds") {
    CHECK(unweighted_upper_bound_log10(1) == doctest::Approx(std::log10(4.24)).epsilon(1e-15));
    auto wb1 = weighted_upper_bound(1);
    CHECK(std::abs(wb1.psi_power_log10 - std::log10(4.0 + 2.0 * std::sqrt(3.0))) < 1e-9);
    CHECK(std::abs(wb1.closed_form_log10 - 2.0 * std::log10(1.0 / lambert_w(0.5))) < 1e-12);
    for (int d = 1; d <= 30; ++d) {
        auto wb = weighted_upper_bound(d);
        CHECK(wb.psi_power_log10 <= wb.closed_form_log10);
    }
    // measured crossover: the unweighted bound exceeds the weighted one up to
    // d = 20 and drops below it from d = 21 on
    for (int d = 2; d <= 20; ++d)
        CHECK(unweighted_upper_bound_log10(d) > weighted_upper_bound(d).psi_power_log10);
    for (int d = 21; d <= 50; ++d)
        CHECK(unweighted_upper_bound_log10(d) < weighted_upper_bound(d).psi_power_log10);
    // d = 100 stays finite in log space
    CHECK(std::isfinite(unweighted_upper_bound_log10(100)));
    CHECK(std::isfinite(weighted_upper_bound(100).closed_form_log10));
}

TEST_CASE("mu_hat product formula") {
    // d=1: (1/2)(1/2)(psi/(psi+1)) with psi = 1+sqrt(3) equals 1/(2 psi)
    double p1 = 1.0 + std::sqrt(3.0);
    CHECK(std::abs(mu_hat(1) - 1.0 / (2.0 * p1)) < 1e-12);
    CHECK(std::abs(mu_hat(1) - 0.1830127) < 1e-7);
    for (int d = 1; d <= 30; ++d) {
        double m = mu_hat(d);
        CHECK(m > 0.0);
        CHECK(m < 1.0 / (d + 1.0));
    }
    CHECK_THROWS_AS(mu_hat(0), std::domain_error);
}

TEST_CASE("bound_report fields") {
    BoundReport r1 = bound_report(1);
    CHECK(r1.beta == 2.0);
    CHECK(std::isnan(r1.xi_value));
    CHECK(std::isnan(r1.mu));
    CHECK(r1.log10_upper_unweighted == doctest::Approx(std::log10(4.24)));
    CHECK(r1.psi_value >= r1.psi_bracket_lo);
    CHECK(r1.psi_value <= r1.psi_bracket_hi);

    BoundReport r2 = bound_report(2);
    CHECK(r2.mu == 0.5);
    CHECK(r2.xi_value == xi(2));
    CHECK(r2.xi_variant_value == xi_variant(2));
    CHECK(r2.mu_hat_value == mu_hat(2));
    CHECK(std::abs(r2.lambert_ratio - lambert_oracle(2.0 / 3.0)) < 1e-10);
    CHECK_THROWS_AS(bound_report(0), std::domain_error);
}
