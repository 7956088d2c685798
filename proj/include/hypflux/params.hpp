#pragma once

#include <string>
#include <vector>

namespace hypflux {

/// Model constants for the one-dimensional scalar field (stretched string)
/// coupled to a harmonic oscillator.  All derived quantities (string
/// tension, friction constant, Unruh temperature) are computed on demand
/// and never stored, so the struct cannot hold an inconsistent state.
///
/// Defaults are natural units: sigma = c = hbar = kB = 1, with a unit
/// oscillator (m = K = F = 1) in the vacuum state (T = 0).
struct PhysicalParams {
    double sigma = 1.0; ///< string mass per unit length
    double c     = 1.0; ///< wave speed
    double hbar  = 1.0;
    double kB    = 1.0; ///< Boltzmann constant
    double m     = 1.0; ///< oscillator mass
    double K     = 1.0; ///< spring constant
    double F     = 1.0; ///< constant driving force (>= 0)
    double T     = 0.0; ///< field temperature (>= 0)

    /// String tension sigma * c^2.
    double tension() const { return sigma * c * c; }
};

/// Natural-unit preset: sigma = c = hbar = kB = 1 with the oscillator
/// parameters free.
PhysicalParams natural_units(double m = 1.0, double K = 1.0,
                             double F = 1.0, double T = 0.0);

/// Radiation friction constant zeta = 2 sqrt(sigma * tension) = 2 sigma c.
double friction_constant(const PhysicalParams& p);

/// Returns every violated invariant as a human-readable message; empty
/// means the parameter set is valid.  Never throws.
std::vector<std::string> validate(const PhysicalParams& p);

/// Parse from a flat JSON object {"sigma": .., "c": .., ...}.  Missing
/// fields keep their natural-unit defaults.  Unknown keys are rejected.
PhysicalParams params_from_json(const std::string& text);

/// Serialize to a flat JSON object with all eight fields.
std::string params_to_json(const PhysicalParams& p);

} // namespace hypflux
