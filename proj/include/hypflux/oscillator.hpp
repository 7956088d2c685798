#pragma once

// Linear response of the field-coupled oscillator and the statistics of
// its fluctuating force, for an oscillator at rest in a thermal field and
// for one carried along the hyperbolic worldline.  All statistics are
// computed spectrally; divergent spectral integrals are regulated with
// exp(-eps*omega) and extrapolated, or cut off at an explicit Omega, and
// the metadata says which.

#include <complex>
#include <functional>

#include "hypflux/params.hpp"
#include "hypflux/quadrature.hpp"

namespace hypflux {

/// alpha(omega) = 1 / (-m omega^2 - i omega zeta + K); the denominator
/// never vanishes for real omega when zeta > 0.
std::complex<double> susceptibility(const PhysicalParams& p, double omega);

/// Symmetrized force correlation at a proper-time (or lab-time) lag,
/// together with the regulator metadata it was computed under.
struct ForceCorrelation {
    double dtau = 0.0;
    double value = 0.0;
    double epsilon_used = 0.0; ///< smallest regulator rung evaluated
    bool extrapolated = false;
    double extrapolation_error = 0.0;
};

/// Position autocorrelation of the resting oscillator,
/// (hbar/pi) int_0^inf Im{alpha} coth(hbar omega/2 kB T) cos(omega dt) domega.
/// Absolutely convergent; no regulator involved.
double position_correlation_stationary(const PhysicalParams& p, double dt,
                                       const QuadratureSpec& spec = {});

/// Force correlation of the resting oscillator,
/// (hbar/pi) int_0^inf zeta omega coth(hbar omega/2 kB T) cos(omega dt),
/// regulated with exp(-eps omega) on a geometric ladder and extrapolated
/// to eps -> 0.  Throws SingularityError at dt = 0.
ForceCorrelation force_correlation_stationary(const PhysicalParams& p,
                                              double dt,
                                              const QuadratureSpec& spec = {});

/// Force correlation along the hyperbolic worldline,
/// (hbar/pi) int_0^inf zeta omega coth(pi m c omega / F) cos(omega dtau),
/// same regulator treatment.  Identical to the stationary correlation at
/// the Unruh temperature.
ForceCorrelation force_correlation_moving(const PhysicalParams& p,
                                          double dtau,
                                          const QuadratureSpec& spec = {});

/// Force commutator smeared with a test function:
///   int dtau f(tau) [F(0), F(tau)] = 2 i hbar zeta f'(0).
/// The derivative at zero is taken by Richardson-refined central
/// differences.  Motion-independent.
std::complex<double>
force_commutator_smeared(const PhysicalParams& p,
                         const std::function<double(double)>& testfn);

/// Spectral route for the same smeared commutator, for cross-checking the
/// distributional result: the commutator kernel
/// i (2 hbar/pi) int_0^inf zeta omega sin(omega tau) domega is paired with
/// f on [-support_halfwidth, support_halfwidth] under the regulator ladder.
std::complex<double> force_commutator_smeared_spectral(
    const PhysicalParams& p, const std::function<double(double)>& testfn,
    double support_halfwidth, const QuadratureSpec& spec = {});

/// Mean radiated power of the moving oscillator per unit proper time,
/// (hbar/pi) int_0^Omega omega^3 zeta^2 |alpha|^2 coth(pi m c omega/F).
/// Logarithmically divergent in Omega, so spec.cutoff_omega is mandatory;
/// the value is per-cutoff by construction.
double radiated_power_moving(const PhysicalParams& p,
                             const QuadratureSpec& spec);

/// Radiated power zeta <xdot^2> of the resting oscillator at temperature
/// T, same hard-cutoff convention.
double radiated_power_stationary(const PhysicalParams& p,
                                 const QuadratureSpec& spec);

/// Residual of the stationary energy balance: the integral over [0, Omega]
/// of (radiated-power integrand) - (work-done-by-force integrand).  The two
/// integrands agree pointwise through Im alpha = zeta omega |alpha|^2, so
/// the residual vanishes at every cutoff.
double energy_balance_residual(const PhysicalParams& p,
                               const QuadratureSpec& spec = {});

} // namespace hypflux
