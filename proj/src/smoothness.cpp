#include "bestreply/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bestreply/bounds.hpp"
#include "bestreply/instance.hpp"

namespace bestreply {

namespace {

double ipow(double base, int exp) {
    double out = 1.0, b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) out *= b;
        b *= b;
    }
    return out;
}

double tol_of(double lhs, double rhs) {
    return 1e-12 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

bool violates(double lhs, double rhs) { return rhs - lhs < -tol_of(lhs, rhs); }

// The three terms of the integrated inequality cancel almost completely
// near the diagonal; a compensated sum keeps the residual trustworthy.
double neumaier3(double a, double b, double c) {
    double s = a, comp = 0.0;
    for (double v : {b, c}) {
        double t = s + v;
        comp += (std::fabs(s) >= std::fabs(v)) ? (s - t) + v : (v - t) + s;
        s = t;
    }
    return s + comp;
}

void record(ViolationReport& rep, int d, int d_r, double x, double y,
            double lhs, double rhs) {
    ++rep.checked_points;
    const double gap = rhs - lhs;
    if (rep.checked_points == 1 || gap < rep.min_gap) rep.min_gap = gap;
    if (violates(lhs, rhs)) rep.violations.push_back({d, d_r, x, y, lhs, rhs, gap});
}

// Certificate lambda for the weighted inequality at a given mu > 0:
//   sup_{z >= 0} (z+1)^d - mu z^{d+1}.
// The ratio d(z+1)^{d-1} / ((d+1) z^d) is strictly decreasing from +inf to
// 0, so the stationarity condition ratio == mu has a unique root; bisect it.
double weighted_lambda_certificate(int d, double mu) {
    if (!(mu > 0.0)) throw std::domain_error("mu must be positive to derive lambda");
    auto h = [&](double z) { return std::pow(z + 1.0, d) - mu * std::pow(z, d + 1); };
    auto log_ratio_minus_log_mu = [&](double z) {
        return std::log(static_cast<double>(d)) - std::log(d + 1.0) +
               (d - 1) * std::log1p(z) - d * std::log(z) - std::log(mu);
    };
    double lo = 1e-12, hi = 1.0;
    while (log_ratio_minus_log_mu(hi) > 0.0) {
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("lambda certificate bracket failed");
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (log_ratio_minus_log_mu(mid) > 0.0 ? lo : hi) = mid;
    }
    return std::max(1.0, h(0.5 * (lo + hi))); // h(0) = 1 is always available
}

} // namespace

ViolationReport check_unweighted_inequality(int d, int x_max, int y_max,
                                            std::optional<double> lambda_override,
                                            std::optional<double> mu_override) {
    const bool both = lambda_override.has_value() && mu_override.has_value();
    if (d < (both ? 1 : 2) || d > kMaxDegree)
        throw std::domain_error("degree out of range for the unweighted check");
    if (x_max < 0 || y_max < 1)
        throw std::domain_error("grid bounds must satisfy x_max >= 0, y_max >= 1");

    double lambda, mu;
    if (both) {
        lambda = *lambda_override;
        mu = *mu_override;
    } else {
        SmoothnessParamsUnweighted p = smoothness_params_unweighted(d);
        lambda = lambda_override.value_or(std::pow(10.0, p.log10_lambda));
        mu = mu_override.value_or(p.mu);
    }

    ViolationReport rep;
    for (int d_r = 1; d_r <= d; ++d_r) {
        for (int x = 0; x <= x_max; ++x) {
            for (int y = 1; y <= y_max; ++y) {
                const double t1 = (d_r + 1) * ipow(y + 1.0, d_r) * x;
                const double t2 = -ipow(y, d_r + 1);
                const double t3 =
                    (ipow(y, d_r + 2) - ipow(y - 1.0, d_r + 2) + d_r + 1) /
                    (d_r + 2);
                const double lhs = neumaier3(t1, t2, t3);
                const double lam_term = (x == 0) ? 0.0 : lambda * ipow(x, d_r + 1);
                const double rhs = lam_term + mu * ipow(y, d_r + 1);
                record(rep, d, d_r, x, y, lhs, rhs);
            }
        }
    }
    return rep;
}

ViolationReport check_weighted_inequality(int d, int grid_per_axis,
                                          std::optional<double> lambda_override,
                                          std::optional<double> mu_override) {
    if (d < 1 || d > kMaxDegree)
        throw std::domain_error("degree out of range for the weighted check");
    if (grid_per_axis < 2) throw std::domain_error("grid_per_axis must be >= 2");

    const double mu = mu_override.value_or(mu_hat(d));
    const double lambda = lambda_override.has_value()
                              ? *lambda_override
                              : weighted_lambda_certificate(d, mu);

    std::vector<double> grid(grid_per_axis);
    for (int j = 0; j < grid_per_axis; ++j)
        grid[j] = std::pow(2.0, -6.0 + 12.0 * j / (grid_per_axis - 1));

    ViolationReport rep;
    for (int d_r = 0; d_r <= d; ++d_r) {
        for (double x : grid) {
            for (double y : grid) {
                const double lhs = x * ipow(x + y, d_r);
                const double rhs =
                    lambda * x * ipow(x, d_r) + mu * y * ipow(y, d_r);
                record(rep, d, d_r, x, y, lhs, rhs);
            }
        }
    }
    return rep;
}

GMaxResult verify_g_max(int d, std::optional<double> z_max, std::int64_t samples) {
    if (d < 1 || d > kMaxDegree)
        throw std::domain_error("degree out of range for the g-max scan");
    if (samples < 10000) throw std::domain_error("samples must be >= 10000");

    const double psi_d = psi(d);
    const double hi = z_max.value_or(3.0 * psi_d);
    if (hi < 3.0 * psi_d - 1e-9)
        throw std::domain_error("z_max must cover at least 3 * Psi_d");

    const double mu = mu_hat(d);
    const double denom = 1.0 / (d + 1) - mu; // positive: mu_hat < 1/(d+1)
    GMaxResult out;
    out.psi_power = ipow(psi_d, d + 1);
    for (std::int64_t i = 0; i < samples; ++i) {
        const double z = hi * static_cast<double>(i) / (samples - 1);
        const double g = (ipow(z + 1.0, d) - mu * ipow(z, d + 1)) / denom;
        if (i == 0 || g > out.max_g) {
            out.max_g = g;
            out.at_z = z;
        }
    }
    return out;
}

std::map<std::string, ViolationReport> check_lemma_inequalities(int grid_size) {
    if (grid_size < 100) throw std::domain_error("grid_size must be >= 100");

    std::map<std::string, ViolationReport> out;

    { // a: integrated power-sum bound, exact equality at y = 1
        ViolationReport rep;
        for (int d = 1; d <= 50; ++d) {
            for (int y = 1; y <= grid_size; ++y) {
                const double lhs =
                    ipow(y, d + 2) - ipow(y - 1.0, d + 2) + d + 1;
                const double rhs = (d + 2) * ipow(y, d + 1);
                record(rep, d, d, 0.0, y, lhs, rhs);
            }
        }
        out["a"] = rep;
    }

    { // b: exponential comparison stays strictly below 2
        ViolationReport rep;
        for (int d_r = 2; d_r <= 50; ++d_r) {
            for (int j = 0; j < grid_size; ++j) {
                const double c = 1.0 + 9.0 * j / (grid_size - 1);
                const double lhs = (d_r + 2) * std::exp(-1.0 / c) -
                                   d_r * std::exp(-(d_r + 2) / (c * d_r - 1.0));
                record(rep, d_r, d_r, c, 0.0, lhs, 2.0);
            }
        }
        out["b"] = rep;
    }

    for (const char* key : {"c", "c2"}) { // monotone decrease in c
        const bool variant = (key[1] != '\0');
        ViolationReport rep;
        for (int d_r = 2; d_r <= 50; ++d_r) {
            const double k = variant ? 2.0 : 2.0 - 1.0 / d_r;
            auto phi = [&](double c) {
                return (d_r + 1) * std::exp(1.0 / c) - k * c * d_r +
                       c * c * d_r * (1.0 - std::exp(-1.0 / c));
            };
            double prev = phi(1.0);
            for (int j = 1; j < grid_size; ++j) {
                const double c = 1.0 + 9.0 * j / (grid_size - 1);
                const double cur = phi(c);
                // decreasing: next value is the lhs, previous the rhs
                record(rep, d_r, d_r, 1.0 + 9.0 * (j - 1) / (grid_size - 1), c,
                       cur, prev);
                prev = cur;
            }
        }
        out[variant ? "c2" : "c"] = rep;
    }

    { // d: scan for the argmax; it must sit at the right end of the interval
        ViolationReport rep;
        const double e_w = std::exp(lambert_w(1.27));
        for (int d_r = 2; d_r <= 50; ++d_r) {
            const double z_hi =
                1.0 / (2.0 * lambert_w((d_r - 1.0) / (2.0 * (d_r + 1.0))));
            auto f = [&](double z) {
                return ipow(z * d_r, d_r) * ((d_r + 1) * e_w - (d_r - 1) * z);
            };
            int best = 0;
            double best_val = f(0.0);
            for (int j = 1; j < grid_size; ++j) {
                const double v = f(z_hi * j / (grid_size - 1));
                if (v > best_val) {
                    best_val = v;
                    best = j;
                }
            }
            rep.checked_points += grid_size;
            const double end_val = f(z_hi);
            const double gap = end_val - best_val; // 0 when max at endpoint
            if (d_r == 2 || gap < rep.min_gap) rep.min_gap = gap;
            if (best < grid_size - 2) {
                rep.violations.push_back({d_r, d_r,
                                          z_hi * best / (grid_size - 1), z_hi,
                                          best_val, end_val, gap});
            }
        }
        out["d"] = rep;
    }

    for (const char* key : {"e", "e2"}) { // root uniqueness on [1.05, 8]
        const bool variant = (key[1] != '\0');
        ViolationReport rep;
        for (int d = 2; d <= 50; ++d) {
            const double k = variant ? 2.0 - 1.0 / d : 2.0;
            auto phi = [&](double x) {
                return x * x * std::exp(-1.0 / x) - x * x + k * x -
                       std::exp(1.0 / x) * (1.0 + 1.0 / d);
            };
            int sign_changes = 0;
            double prev = phi(1.05);
            for (int j = 1; j < grid_size; ++j) {
                const double x = 1.05 + (8.0 - 1.05) * j / (grid_size - 1);
                const double cur = phi(x);
                if ((prev < 0.0) != (cur < 0.0)) ++sign_changes;
                prev = cur;
            }
            rep.checked_points += grid_size - 1;
            const double gap = 1.0 - sign_changes;
            if (d == 2 || gap < rep.min_gap) rep.min_gap = gap;
            if (sign_changes != 1)
                rep.violations.push_back({d, d, 1.05, 8.0,
                                          static_cast<double>(sign_changes),
                                          1.0, gap});
        }
        out[variant ? "e2" : "e"] = rep;
    }

    return out;
}

} // namespace bestreply
