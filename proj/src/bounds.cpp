#include "bestreply/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bestreply {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double wlog(double x) { return std::log(x); }

} // namespace

double lambert_w(double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error("lambert_w: argument must be finite and >= 0");
    if (x == 0.0) return 0.0;

    double w;
    if (x > 1e15) {
        // Solve w + log w = log x; e^w would be astronomically large but this
        // form never materializes it.
        const double lx = wlog(x);
        w = lx - wlog(lx);
        for (int it = 0; it < 64; ++it) {
            const double f = w + wlog(w) - lx;
            const double step = f * w / (w + 1.0);
            w -= step;
            if (std::abs(step) <= 1e-16 * w) break;
        }
        return w;
    }

    w = (x > 3.0) ? wlog(x) - wlog(wlog(x)) : std::log1p(x);
    bool converged = false;
    for (int it = 0; it < 64; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double fp = ew * (w + 1.0);
        const double denom = fp - (w + 2.0) * f / (2.0 * w + 2.0);
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) {
            converged = true;
            break;
        }
    }
    if (!converged || std::abs(w * std::exp(w) - x) > 1e-13 * std::max(1.0, x)) {
        // Bisection fallback on [0, log1p(x)]: w e^w - x is <= 0 at 0 and
        // >= 0 at log1p(x) since log(1+x)(1+x) >= x for x >= 0.
        double lo = 0.0, hi = std::log1p(x);
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (mid * std::exp(mid) - x <= 0.0 ? lo : hi) = mid;
        }
        w = 0.5 * (lo + hi);
    }
    return w;
}

namespace {

// Bisection for a strictly increasing f on [lo, hi]. If the bracket misses
// the sign change it is expanded geometrically around itself (floor > 0).
template <class F>
double bisect_increasing(F f, double lo, double hi, const char* what) {
    for (int grow = 0; f(lo) > 0.0 && grow < 64; ++grow) lo = std::max(lo * 0.5, 1e-12);
    for (int grow = 0; f(hi) < 0.0 && grow < 64; ++grow) hi *= 2.0;
    if (!(f(lo) <= 0.0 && f(hi) >= 0.0))
        throw std::runtime_error(std::string("root bracketing failed for ") + what);
    for (int it = 0; it < 200 && hi - lo > 1e-14 * lo; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) <= 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double psi(double d) {
    if (!std::isfinite(d) || d < 0.0)
        throw std::domain_error("psi: d must be finite and >= 0");
    if (d == 0.0) return 1.0;

    // Log form of (d+1)(x+1)^d = x^(d+1); strictly increasing in x because
    // d/dx = (x+d+1)/(x(x+1)) > 0.
    const auto f = [d](double x) {
        return (d + 1.0) * wlog(x) - d * std::log1p(x) - std::log1p(d);
    };
    const double hi = d / lambert_w(d / (d + 1.0));
    const double lo = std::max(hi - 1.0, 1e-9);
    return bisect_increasing(f, lo, hi, "psi");
}

namespace {

// Rearranged Xi equation with linear coefficient k (k = 2 canonical,
// k = 2 - 1/d variant):  x^2 e^(-1/x) - x^2 + k x - e^(1/x) (1 + 1/d) = 0.
// The first three terms increase in x and the subtracted term decreases,
// so the whole expression is strictly increasing: bisection applies.
double xi_equation(double x, double k, double d) {
    return x * x * std::exp(-1.0 / x) - x * x + k * x -
           std::exp(1.0 / x) * (1.0 + 1.0 / d);
}

} // namespace

double xi(int d) {
    if (d < 2) throw std::domain_error("xi: d must be an integer >= 2");
    const double dd = d;
    const auto f = [dd](double x) { return xi_equation(x, 2.0, dd); };
    const double lo = 1.0 / lambert_w(1.27 * dd / (dd + 1.0));
    const double hi = 1.0 / lambert_w(1.20 * dd / (dd + 1.0));
    return bisect_increasing(f, lo * 0.999, hi * 1.001, "xi");
}

double xi_variant(int d) {
    if (d < 2) throw std::domain_error("xi_variant: d must be an integer >= 2");
    const double dd = d;
    const auto f = [dd](double x) { return xi_equation(x, 2.0 - 1.0 / dd, dd); };
    return bisect_increasing(f, dd / (dd - 1.0), 16.0, "xi_variant");
}

SmoothnessParamsUnweighted smoothness_params_unweighted(int d) {
    if (d < 2) throw std::domain_error("smoothness_params_unweighted: d must be >= 2");
    return {(d + 1.0) * std::log10(xi(d) * d), 1.0 - 1.0 / d};
}

double unweighted_upper_bound_log10(int d) {
    if (d < 1) throw std::domain_error("unweighted_upper_bound: d must be >= 1");
    if (d == 1) return std::log10(4.24);
    return std::log10(static_cast<double>(d)) + (d + 1.0) * std::log10(xi(d) * d);
}

WeightedUpperBound weighted_upper_bound(int d) {
    if (d < 1) throw std::domain_error("weighted_upper_bound: d must be >= 1");
    const double dd = d;
    return {(dd + 1.0) * std::log10(psi(dd)),
            (dd + 1.0) * std::log10(dd / lambert_w(dd / (dd + 1.0)))};
}

double mu_hat(int d) {
    if (d < 1) throw std::domain_error("mu_hat: d must be >= 1");
    const double dd = d;
    const double p = psi(dd);
    const double v = (1.0 / (dd + 1.0)) * (dd / (dd + 1.0)) * (p / (p + 1.0));
    if (!(v > 0.0 && v < 1.0 / (dd + 1.0)))
        throw std::logic_error("mu_hat: value escaped (0, 1/(d+1))");
    return v;
}

BoundReport bound_report(int d) {
    if (d < 1) throw std::domain_error("bound_report: d must be >= 1");
    const double dd = d;
    BoundReport r;
    r.d = d;
    r.lambert_ratio = lambert_w(dd / (dd + 1.0));
    r.psi_value = psi(dd);
    r.psi_bracket_hi = dd / r.lambert_ratio;
    r.psi_bracket_lo = r.psi_bracket_hi - 1.0;
    if (d >= 2) {
        r.xi_value = xi(d);
        r.xi_variant_value = xi_variant(d);
        const SmoothnessParamsUnweighted sp = smoothness_params_unweighted(d);
        r.mu = sp.mu;
        r.log10_lambda = sp.log10_lambda;
        r.xi_bracket_stmt_lo = 1.0 / lambert_w(1.27 * dd / (dd + 1.0));
        r.xi_bracket_stmt_hi = 1.0 / lambert_w(1.20 * dd / (dd + 1.0));
        r.xi_bracket_proof_lo = 1.0 / lambert_w((1.27 * dd - 1.0) / (dd + 1.0));
        r.xi_bracket_proof_hi = 1.0 / lambert_w((1.20 * dd - 1.0) / (dd + 1.0));
    } else {
        r.xi_value = r.xi_variant_value = kNaN;
        r.mu = r.log10_lambda = kNaN;
        r.xi_bracket_stmt_lo = r.xi_bracket_stmt_hi = kNaN;
        r.xi_bracket_proof_lo = r.xi_bracket_proof_hi = kNaN;
    }
    r.log10_upper_unweighted = unweighted_upper_bound_log10(d);
    const WeightedUpperBound wb = weighted_upper_bound(d);
    r.log10_upper_weighted_psi = wb.psi_power_log10;
    r.log10_upper_weighted_closed = wb.closed_form_log10;
    r.beta = dd + 1.0;
    r.mu_hat_value = mu_hat(d);
    return r;
}

} // namespace bestreply
