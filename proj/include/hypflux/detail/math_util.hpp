#pragma once

#include <cmath>

namespace hypflux::detail {

inline constexpr double kPi = 3.14159265358979323846;

inline double sgn(double x) { return (x > 0.0) - (x < 0.0); }

/// coth(x) with a Laurent series near zero so that omega * coth(a*omega)
/// stays accurate down to omega = 0.
inline double coth(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        // 1/x + x/3 - x^3/45
        return 1.0 / x + x / 3.0 - x * x * x / 45.0;
    }
    return 1.0 / std::tanh(x);
}

/// omega * coth(scale * omega); equals 1/scale at omega = 0.
inline double omega_coth(double omega, double scale) {
    const double x = scale * omega;
    if (std::abs(x) < 1e-4)
        return 1.0 / scale + omega * (x / 3.0 - x * x * x / 45.0);
    return omega / std::tanh(x);
}

} // namespace hypflux::detail
