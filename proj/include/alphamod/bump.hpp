#pragma once

#include <cmath>

namespace alphamod {

/// C^∞ transition: 1 for t <= 0, 0 for t >= 1, built from exp(-1/t).
inline double smooth_step(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double a = std::exp(-1.0 / (1.0 - t));
    const double b = std::exp(-1.0 / t);
    return a / (a + b);
}

/// Radial plateau bump: 1 on r <= inner, 0 on r >= outer, smooth in between.
inline double plateau_bump(double r, double inner, double outer) {
    if (r <= inner) return 1.0;
    if (r >= outer) return 0.0;
    return smooth_step((r - inner) / (outer - inner));
}

}  // namespace alphamod
