#pragma once

// Hyperbolic (uniformly accelerated) worldline and its causal structure:
// parametric position, invariant interval between worldline points, the
// Unruh temperature, and the retarded proper time seen from a field point.

#include <cmath>

#include "hypflux/params.hpp"

namespace hypflux {

/// Trajectory of a point mass m under constant force F:
///   y(tau) = (m c^2 / F) cosh(F tau / m c),
///   t(tau) = (m c / F)   sinh(F tau / m c).
/// The turning point is y = m c^2 / F at tau = 0.
struct Worldline {
    double m = 1.0;
    double c = 1.0;
    double F = 1.0;

    double rapidity(double tau) const { return F * tau / (m * c); }
    double y(double tau) const {
        return m * c * c / F * std::cosh(rapidity(tau));
    }
    double t(double tau) const { return m * c / F * std::sinh(rapidity(tau)); }
    /// dy/dt = c tanh(F tau / m c); strictly below c in magnitude.
    double velocity(double tau) const {
        return c * std::tanh(rapidity(tau));
    }
    double closest_approach() const { return m * c * c / F; }
};

Worldline make_worldline(const PhysicalParams& p);

struct WorldlinePoint {
    double y = 0.0;
    double t = 0.0;
};

struct FieldPoint {
    double y = 0.0;
    double t = 0.0;
};

struct RetardedTime {
    double tau_ret = 0.0;
    /// d tau_ret / d t at the field point; positive.
    double dilation = 0.0;
};

WorldlinePoint worldline_position(const Worldline& w, double tau);

/// Signed invariant interval between two worldline points,
/// (2 m c / F) sinh(F (tau1 - tau2) / 2 m c); antisymmetric in its
/// arguments and a function of the lag alone.
double invariant_interval(const Worldline& w, double tau1, double tau2);

/// T_U = hbar F / (2 pi m c kB); the temperature at which a static thermal
/// correlator reproduces the vacuum correlator seen along the worldline.
double unruh_temperature(const PhysicalParams& p);

/// Closed-form retarded time for a field point left of the point of
/// closest approach (fp.y < m c^2/F):
///   tau_ret = (m c / F) log(F (t + y/c) / m c),
///   dilation = m c / (F (t + y/c)).
/// Throws CausalityError when t + y/c <= 0 (no signal has arrived yet) and
/// DomainError when fp.y >= m c^2/F (use retarded_time_solve there).
RetardedTime retarded_time_closed(const Worldline& w, const FieldPoint& fp);

/// Retarded time by bracketing root solve of
/// t - t(tau) = |y - y(tau)| / c, valid for any field point with
/// t + y/c > 0; dilation by implicit differentiation.  Agrees with the
/// closed form left of closest approach.
RetardedTime retarded_time_solve(const Worldline& w, const FieldPoint& fp);

} // namespace hypflux
