#pragma once

#include <functional>
#include <string>

namespace rotvac {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    unsigned max_depth = 18;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive Gauss–Kronrod on [a, b]. Throws NumericError when the error
/// estimate stays above tolerance after max_depth bisections.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& opts = {});

/// Adaptive Gauss–Kronrod on [a, ∞) through the standard algebraic map.
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f,
                                       double a,
                                       const QuadratureOptions& opts = {});

/// ∫₀^π dθ ∫₀^{2π} dφ f(θ, φ). The sinθ of the solid-angle measure is NOT
/// included; callers supply it.
QuadratureResult integrate_angles(const std::function<double(double, double)>& f,
                                  const QuadratureOptions& opts = {});

} // namespace rotvac
