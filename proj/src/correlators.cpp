#include "hypflux/correlators.hpp"

#include <cmath>

#include "hypflux/detail/math_util.hpp"
#include "hypflux/errors.hpp"

namespace hypflux {

using detail::kPi;

namespace {

void check_off_light_cone(const PhysicalParams& p,
                          const SpacetimeSeparation& s) {
    if (std::abs(s.dt) == std::abs(s.dy / p.c))
        throw LightConeError("separation lies exactly on the light cone");
}

// log|sinh(x)|, overflow-safe for large |x|.
double log_abs_sinh(double x) {
    const double ax = std::abs(x);
    if (ax > 20.0) return ax - std::log(2.0) + std::log1p(-std::exp(-2.0 * ax));
    return std::log(std::abs(std::sinh(x)));
}

// The two light-cone coordinates dt -+ dy/c scaled by pi kB T / hbar.
// Arguments may be negative; only log|sinh| of them is ever used, and the
// correlation is even under (dt, dy) -> (-dt, -dy).
double thermal_correlation_raw(const PhysicalParams& p,
                               const SpacetimeSeparation& s) {
    const double a = kPi * p.kB * p.T / p.hbar;
    const double um = a * (s.dt - s.dy / p.c);
    const double up = a * (s.dt + s.dy / p.c);
    return -(p.hbar / (4.0 * kPi * p.sigma * p.c)) *
           (log_abs_sinh(um) + log_abs_sinh(up));
}

} // namespace

double thermal_correlation_diff(const PhysicalParams& p,
                                const SpacetimeSeparation& a,
                                const SpacetimeSeparation& b) {
    if (p.T <= 0.0)
        throw DomainError(
            "thermal_correlation_diff requires T > 0; "
            "use zero_temp_correlation_diff for the vacuum");
    check_off_light_cone(p, a);
    check_off_light_cone(p, b);
    return thermal_correlation_raw(p, a) - thermal_correlation_raw(p, b);
}

double fixed_point_correlation_diff(const PhysicalParams& p, double dt_a,
                                    double dt_b) {
    if (p.T <= 0.0)
        throw DomainError(
            "fixed_point_correlation_diff requires T > 0; "
            "use zero_temp_correlation_diff for the vacuum");
    if (!(dt_a > 0.0) || !(dt_b > 0.0))
        throw DomainError(
            "fixed_point_correlation_diff requires positive time lags; "
            "the correlation is even, apply |dt| upstream");
    const double a = kPi * p.kB * p.T / p.hbar;
    return -(p.hbar / (2.0 * kPi * p.sigma * p.c)) *
           (log_abs_sinh(a * dt_a) - log_abs_sinh(a * dt_b));
}

double zero_temp_correlation_diff(const PhysicalParams& p,
                                  const SpacetimeSeparation& a,
                                  const SpacetimeSeparation& b) {
    check_off_light_cone(p, a);
    check_off_light_cone(p, b);
    auto interval_sq = [&](const SpacetimeSeparation& s) {
        return s.dt * s.dt - (s.dy / p.c) * (s.dy / p.c);
    };
    return -(p.hbar / (4.0 * kPi * p.sigma * p.c)) *
           (std::log(std::abs(interval_sq(a))) -
            std::log(std::abs(interval_sq(b))));
}

double correlation_time_derivative(const PhysicalParams& p,
                                   const SpacetimeSeparation& s) {
    if (p.T <= 0.0)
        throw DomainError("correlation_time_derivative requires T > 0");
    check_off_light_cone(p, s);
    const double a = kPi * p.kB * p.T / p.hbar;
    const double um = a * (s.dt - s.dy / p.c);
    const double up = a * (s.dt + s.dy / p.c);
    return -(p.kB * p.T / (4.0 * p.sigma * p.c)) *
           (detail::coth(um) + detail::coth(up));
}

std::complex<double> field_commutator(const PhysicalParams& p,
                                      const SpacetimeSeparation& s) {
    const double dt2 = s.dt * s.dt;
    const double dy2 = (s.dy / p.c) * (s.dy / p.c);
    if (dt2 == dy2)
        throw LightConeError(
            "field_commutator: step function undefined on the light cone");
    if (dt2 < dy2) return {0.0, 0.0}; // spacelike
    return {0.0, -p.hbar / (2.0 * p.sigma * p.c) * detail::sgn(s.dt)};
}

CorrelationDifference make_correlation_difference(const PhysicalParams& p,
                                                  const SpacetimeSeparation& a,
                                                  const SpacetimeSeparation& b) {
    CorrelationDifference d;
    d.a = a;
    d.b = b;
    d.value = p.T > 0.0 ? thermal_correlation_diff(p, a, b)
                        : zero_temp_correlation_diff(p, a, b);
    return d;
}

double mode_sum_correlation_diff(const PhysicalParams& p,
                                 const ModeSumConfig& cfg,
                                 const SpacetimeSeparation& a,
                                 const SpacetimeSeparation& b) {
    if (!(cfg.L > 0.0) || !(cfg.k_max > 0.0))
        throw DomainError("mode_sum_correlation_diff: L and k_max must be > 0");
    const double n_real = cfg.L * cfg.k_max / (2.0 * kPi);
    if (n_real > 2e9)
        throw DomainError("mode_sum_correlation_diff: mode count overflow");
    const long n_max = static_cast<long>(n_real);

    const double thermal_scale =
        p.T > 0.0 ? p.hbar / (2.0 * p.kB * p.T) : 0.0;

    double sum = 0.0;
    // Summed from the largest k down so the small-k terms, which dominate,
    // are accumulated last.
    for (long n = n_max; n >= 1; --n) {
        const double k = 2.0 * kPi * n / cfg.L;
        const double omega = p.c * k;
        const double weight =
            p.T > 0.0 ? detail::coth(thermal_scale * omega) : 1.0;
        const double plus =
            std::cos(k * a.dy - omega * a.dt) - std::cos(k * b.dy - omega * b.dt);
        const double minus =
            std::cos(-k * a.dy - omega * a.dt) -
            std::cos(-k * b.dy - omega * b.dt);
        sum += weight / omega * (plus + minus);
    }
    return p.hbar / (2.0 * p.sigma * cfg.L) * sum;
}

} // namespace hypflux
