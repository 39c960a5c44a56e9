#pragma once

#include <cstddef>
#include <vector>

namespace bestreply {

// Polynomial cost function c(x) = sum_k coeffs[k] * x^k with non-negative
// coefficients. Construction from a raw vector is unchecked; the instance
// parser and validators enforce the sign constraint.
struct PolyCost {
    std::vector<double> coeffs;

    // Index of the last nonzero coefficient, 0 if all coefficients are zero.
    int degree() const {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (coeffs[i] != 0.0) return static_cast<int>(i);
        return 0;
    }

    double eval(double load) const {
        double acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;)
            acc = acc * load + coeffs[i];
        return acc;
    }

    // Marginal cost a request of weight w pays for joining this resource at
    // current load `load`: w * c(load + w).
    double marginal(double load, double w) const { return w * eval(load + w); }

    bool operator==(const PolyCost&) const = default;
};

} // namespace bestreply
