#pragma once

#include <cmath>

namespace qshannon::detail {

/// t * log(t) with the 0 log 0 = 0 convention, no upper bound (for
/// integrand densities and log-domain weights, unlike x_log_x which is
/// restricted to probabilities).
inline double xlogx_unrestricted(double t) { return t <= 0.0 ? 0.0 : t * std::log(t); }

/// log(sinh(z)) for z > 0 without overflow: sinh overflows past
/// z ~ 710 while L v reaches ~4700.
inline double log_sinh(double z) {
    if (z <= 30.0) return std::log(std::sinh(z));
    return z - std::log(2.0) + std::log1p(-std::exp(-2.0 * z));
}

/// log(cosh(z)), any sign.
inline double log_cosh(double z) {
    const double a = std::abs(z);
    if (a <= 30.0) return std::log(std::cosh(a));
    return a - std::log(2.0) + std::log1p(std::exp(-2.0 * a));
}

}  // namespace qshannon::detail
