#pragma once

#include <functional>

namespace qshannon {

/// One definite integral over a finite interval. The integrands this
/// library feeds here are continuous but contain isolated points where
/// f*log(f) vanishes non-smoothly; callers apply the 0*log0 = 0
/// convention inside the integrand before it reaches the rule.
struct IntegrationRequest {
    std::function<double(double)> integrand;
    double lower;
    double upper;
    double absolute_tolerance = 1e-10;
    int max_depth = 40;
};

/// Adaptive Gauss-Kronrod 7-15 with interval bisection. Deterministic
/// for identical inputs; throws convergence_error (carrying the best
/// estimate) if max_depth is exhausted before the tolerance is met.
double integrate(const IntegrationRequest& req);

double integrate(const std::function<double(double)>& f, double lower, double upper,
                 double absolute_tolerance = 1e-10, int max_depth = 40);

}  // namespace qshannon
