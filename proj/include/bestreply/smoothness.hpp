#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bestreply {

// One grid point where a checked inequality fails. gap = rhs - lhs; a point
// is a violation iff gap < -1e-12 * max(1, |lhs|, |rhs|), so non-strict
// boundary equalities never count as violations.
struct Violation {
    int d = 0;     // degree parameter of the (lambda, mu) pair in use
    int d_r = 0;   // resource degree at the failing point
    double x = 0.0;
    double y = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
};

struct ViolationReport {
    std::int64_t checked_points = 0;
    std::vector<Violation> violations;
    double min_gap = 0.0; // min over the grid of rhs - lhs
    bool ok() const { return violations.empty(); }
};

// Unweighted (lambda_d, mu_d)-smoothness grid check. For every resource
// degree d_r in [1, d] and integers x in [0, x_max], y in [1, y_max]:
//   (d_r+1)(y+1)^{d_r} x - y^{d_r+1}
//     + (y^{d_r+2} - (y-1)^{d_r+2} + d_r + 1) / (d_r + 2)
//   <= lambda x^{d_r+1} + mu y^{d_r+1}.
// lambda/mu default to the degree-d parameters (Xi_d d)^{d+1} and 1 - 1/d;
// overrides substitute a caller-supplied pair (falsification probes).
// Requires d >= 2 unless both overrides are supplied (d >= 1 then).
ViolationReport check_unweighted_inequality(int d, int x_max, int y_max,
                                            std::optional<double> lambda_override = std::nullopt,
                                            std::optional<double> mu_override = std::nullopt);

// Weighted (lambda, mu)-smoothness for the monomial costs c(t) = t^{d_r},
// d_r in [0, d]:  x c(x+y) <= lambda x c(x) + mu y c(y)
// over a positive real grid (geometric, 2^-6 .. 2^6, grid_per_axis points
// per axis). mu defaults to mu_hat(d); lambda to the matching certificate
// sup_z ((z+1)^d - mu z^{d+1}) for the mu in effect. Requires mu > 0 when
// lambda is defaulted (the supremum is infinite otherwise).
ViolationReport check_weighted_inequality(int d, int grid_per_axis = 64,
                                          std::optional<double> lambda_override = std::nullopt,
                                          std::optional<double> mu_override = std::nullopt);

// Grid maximum over z in [0, z_max] of
//   g(z, mu_hat) = ((z+1)^d - mu_hat z^{d+1}) / (1/(d+1) - mu_hat),
// whose true maximum is Psi_d^{d+1}, attained at z = Psi_d. z_max defaults
// to 3 Psi_d and must be >= 3 Psi_d when given; samples >= 10^4.
struct GMaxResult {
    double max_g = 0.0;
    double at_z = 0.0;
    double psi_power = 0.0; // Psi_d^{d+1} for comparison
};
GMaxResult verify_g_max(int d, std::optional<double> z_max = std::nullopt,
                        std::int64_t samples = 100000);

// Named single-inequality checks over finite grids (grid_size >= 100):
//  a  : y^{d+2} - (y-1)^{d+2} + d + 1 <= (d+2) y^{d+1},
//       integers d in 1..50, y in 1..grid_size.
//  b  : (d_r+2) e^{-1/c} - d_r e^{-(d_r+2)/(c d_r - 1)} < 2,
//       d_r in 2..50, c on a grid_size-point grid in [1, 10].
//  c  : (d_r+1) e^{1/c} - (2 - 1/d_r) c d_r + c^2 d_r (1 - e^{-1/c})
//       monotonically decreasing in c (finite differences, same c grid).
//  c2 : the same statement with linear coefficient 2 instead of 2 - 1/d_r.
//  d  : argmax over z in [0, 1/(2 W((d_r-1)/(2(d_r+1))))] of
//       (z d_r)^{d_r} ((d_r+1) e^{W(1.27)} - (d_r-1) z) lies at the right
//       endpoint within one grid step; d_r in 2..50.
//  e  : the rearranged canonical Xi equation changes sign exactly once on
//       [1.05, 8]; d in 2..50.
//  e2 : same uniqueness statement for the (2 - 1/d) variant equation.
// Returned map is keyed by those names. Violations reuse the x/y slots for
// the lemma's own variables (c, z, counts); see each key's semantics above.
std::map<std::string, ViolationReport> check_lemma_inequalities(int grid_size);

} // namespace bestreply
