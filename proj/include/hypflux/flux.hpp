#pragma once

// Energy-flux decomposition at a field point: free-field part, direct
// (source-only) part, and source-field interference part, for the
// oscillator at rest and for the oscillator on the hyperbolic worldline.
// Both component integrals diverge logarithmically, so every theorem here
// is stated per hard cutoff Omega; the net flux vanishes at every cutoff
// because the two integrands cancel pointwise.
//
// Direct and interference integrals are always evaluated on one shared
// adaptive grid (integrate_adaptive_pair), so the pointwise cancellation
// survives in the sums at roundoff level rather than at quadrature
// tolerance.

#include <optional>

#include "hypflux/correlators.hpp"
#include "hypflux/kinematics.hpp"
#include "hypflux/params.hpp"
#include "hypflux/quadrature.hpp"

namespace hypflux {

enum class Side { left, right };

struct FluxReport {
    double j_direct = 0.0;
    double j_interference = 0.0;
    double j_free = 0.0;
    double j_net = 0.0; ///< j_direct + j_interference + j_free
    double cutoff_omega = 0.0;
    std::optional<Side> side;            ///< stationary case
    std::optional<FieldPoint> field_point; ///< moving case
    double dilation = 1.0;               ///< moving case
    bool causally_connected = true;      ///< false => all fluxes zero
};

/// Flux of the free field alone: a sum over symmetric +-k mode pairs of an
/// odd function of k, evaluated pairwise so the cancellation is exact in
/// floating point.  The optional unpaired_k injects one extra +k mode
/// without its partner (test hook proving the cancellation is live).
double free_field_flux(const PhysicalParams& p,
                       const ModeSumConfig& cfg = {},
                       std::optional<double> unpaired_k = std::nullopt);

/// +-(1/2)(hbar/pi) int_0^Omega omega^3 zeta^2 |alpha|^2
///   coth(hbar omega/2 kB T) domega; positive on the right side.
double direct_flux_stationary(const PhysicalParams& p, Side side,
                              double cutoff, const QuadratureSpec& spec = {});

/// -+(1/2)(hbar/pi) int_0^Omega omega^2 zeta Im{alpha}
///   coth(hbar omega/2 kB T) domega; equal and opposite to the direct
/// flux at every cutoff.
double interference_flux_stationary(const PhysicalParams& p, Side side,
                                    double cutoff,
                                    const QuadratureSpec& spec = {});

FluxReport net_flux_stationary(const PhysicalParams& p, Side side,
                               double cutoff, const QuadratureSpec& spec = {});

/// Moving-oscillator direct flux at a field point left of closest
/// approach:
///   -(dtau_ret/dt)^2 (hbar/2 pi) int_0^Omega omega^3 zeta^2 |alpha|^2
///     coth(pi m c omega/F) domega.
/// Returns 0 for a field point not yet causally connected (t + y/c <= 0);
/// throws DomainError right of closest approach.
double direct_flux_moving(const PhysicalParams& p, const FieldPoint& fp,
                          double cutoff, const QuadratureSpec& spec = {});

/// +(dtau_ret/dt)^2 (hbar/2 pi) int_0^Omega omega^2 zeta Im{alpha}
///   coth(pi m c omega/F) domega; the frequency integral over the full
/// symmetric range reduces to this positive-frequency form because the
/// even coth+1 split leaves an even integrand and an odd one.
double interference_flux_moving(const PhysicalParams& p, const FieldPoint& fp,
                                double cutoff,
                                const QuadratureSpec& spec = {});

FluxReport net_flux_moving(const PhysicalParams& p, const FieldPoint& fp,
                           double cutoff, const QuadratureSpec& spec = {});

} // namespace hypflux
