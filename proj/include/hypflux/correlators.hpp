#pragma once

// Correlation functions of the free one-dimensional scalar field.  The
// equal-point correlation carries an infinite additive constant, so every
// entry point here evaluates a difference between two spacetime
// separations; the constant never appears.

#include <complex>

#include "hypflux/params.hpp"

namespace hypflux {

struct SpacetimeSeparation {
    double dy = 0.0;
    double dt = 0.0;
};

/// Regularization-free correlator value C(a) - C(b); antisymmetric under
/// swapping the two separations.
struct CorrelationDifference {
    SpacetimeSeparation a;
    SpacetimeSeparation b;
    double value = 0.0;
};

/// Bundle a correlator difference with its inputs.  Dispatches on the
/// field temperature: thermal closed form for T > 0, vacuum form at T = 0.
CorrelationDifference make_correlation_difference(const PhysicalParams& p,
                                                  const SpacetimeSeparation& a,
                                                  const SpacetimeSeparation& b);

/// Finite-size discretization used by the brute-force mode-sum oracle:
/// string length L with modes k = +-2 pi n / L up to |k| <= k_max
/// (2 * floor(L k_max / 2 pi) modes in total; k = 0 excluded).
struct ModeSumConfig {
    double L = 1e4;
    double k_max = 10.0;
};

/// Thermal correlator difference C(a) - C(b) at temperature T > 0, via
/// -(hbar/4 pi sigma c) [log|sinh(pi kB T (dt - dy/c)/hbar)| +
///  log|sinh(pi kB T (dt + dy/c)/hbar)|] evaluated at a minus at b.
/// Throws LightConeError on light-cone input and DomainError at T = 0
/// (use zero_temp_correlation_diff instead).
double thermal_correlation_diff(const PhysicalParams& p,
                                const SpacetimeSeparation& a,
                                const SpacetimeSeparation& b);

/// Equal-position specialization (dy = 0):
/// -(hbar/2 pi sigma c) [log sinh(pi kB T dt_a/hbar) - log sinh(...dt_b...)].
/// Requires dt_a, dt_b > 0.
double fixed_point_correlation_diff(const PhysicalParams& p, double dt_a,
                                    double dt_b);

/// Vacuum correlator difference,
/// -(hbar/4 pi sigma c) [log|dt_a^2 - dy_a^2/c^2| - log|dt_b^2 - dy_b^2/c^2|].
/// A function of the invariant intervals only, hence Lorentz invariant.
double zero_temp_correlation_diff(const PhysicalParams& p,
                                  const SpacetimeSeparation& a,
                                  const SpacetimeSeparation& b);

/// d C / d dt at separation s for T > 0:
/// -(kB T/4 sigma c) [coth(pi kB T (dt - dy/c)/hbar) +
///  coth(pi kB T (dt + dy/c)/hbar)].
double correlation_time_derivative(const PhysicalParams& p,
                                   const SpacetimeSeparation& s);

/// Field commutator (a c-number):
/// (hbar/2i sigma c) sgn(dt) theta(dt^2 - dy^2/c^2).
/// Exactly zero for spacelike separations, -+ i hbar/(2 sigma c) for
/// timelike ones.  Exactly on the light cone the step function is
/// undefined and a LightConeError is thrown.
std::complex<double> field_commutator(const PhysicalParams& p,
                                      const SpacetimeSeparation& s);

/// Brute-force discrete-mode oracle for the correlator difference:
/// (hbar/2 sigma L) sum_k (1/omega) coth(hbar omega/2 kB T)
///   [cos(k dy_a - omega dt_a) - cos(k dy_b - omega dt_b)],
/// summed over k = +-2 pi n/L, n = 1..N.  T = 0 uses coth -> 1.
double mode_sum_correlation_diff(const PhysicalParams& p,
                                 const ModeSumConfig& cfg,
                                 const SpacetimeSeparation& a,
                                 const SpacetimeSeparation& b);

} // namespace hypflux
