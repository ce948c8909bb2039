#pragma once

#include <functional>

namespace oloid::numeric {

struct Quadrature {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Adaptive Simpson rule on [a, b] with absolute target tol.
Quadrature adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                            int max_depth = 40);

// Derivative of f at t using only evaluations inside [lo, hi]: central
// differences in the interior, second-order one-sided stencils near the ends.
template <class F>
auto derivative_inside(const F& f, double t, double h, double lo, double hi) {
    if (t - h < lo) return (-3.0 * f(t) + 4.0 * f(t + h) - f(t + 2.0 * h)) * (1.0 / (2.0 * h));
    if (t + h > hi) return (3.0 * f(t) - 4.0 * f(t - h) + f(t - 2.0 * h)) * (1.0 / (2.0 * h));
    return (f(t + h) - f(t - h)) * (1.0 / (2.0 * h));
}

}  // namespace oloid::numeric
