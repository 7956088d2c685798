#include "hypflux/oscillator.hpp"

#include <cmath>
#include <vector>

#include "hypflux/detail/math_util.hpp"
#include "hypflux/errors.hpp"

namespace hypflux {

using detail::kPi;

std::complex<double> susceptibility(const PhysicalParams& p, double omega) {
    const double zeta = friction_constant(p);
    const std::complex<double> denom(p.K - p.m * omega * omega,
                                     -omega * zeta);
    return 1.0 / denom;
}

namespace {

// Thermal weight omega * coth(hbar omega / 2 kB T), with the T = 0 limit
// coth -> 1.
double thermal_omega_coth(const PhysicalParams& p, double omega) {
    if (p.T <= 0.0) return omega;
    return detail::omega_coth(omega, p.hbar / (2.0 * p.kB * p.T));
}

// omega * coth(pi m c omega / F): the worldline kernel.  Equal to the
// thermal weight at the Unruh temperature.
double moving_omega_coth(const PhysicalParams& p, double omega) {
    return detail::omega_coth(omega, kPi * p.m * p.c / p.F);
}

// coth(x) - 1 = 2/(e^{2x} - 1); decays exponentially, underflows to zero.
double cothm1(double x) { return 2.0 / std::expm1(2.0 * x); }

// Regulated spectral force correlation
//   (hbar/pi) zeta int_0^inf omega coth(beta omega) cos(omega lag)
//       exp(-eps omega) domega,  extrapolated eps -> 0.
// The coth is split as 1 + (coth - 1): only the vacuum part needs the
// regulator, and its epsilon ladder is a rational function of eps^2 that
// the extrapolation recovers exactly; the thermal excess decays like
// exp(-2 beta omega) and is integrated outright.  beta = 0 selects the
// pure vacuum.
ForceCorrelation regulated_force_correlation(const PhysicalParams& p,
                                             double lag, double beta,
                                             const QuadratureSpec& spec) {
    const double zeta = friction_constant(p);

    const double eps0 = spec.regulator_epsilon > 0.0
                            ? spec.regulator_epsilon
                            : 0.4 * std::abs(lag);
    const int rungs = 6;

    std::vector<std::pair<double, double>> ladder;
    ladder.reserve(rungs);
    QuadratureSpec rung_spec = spec;
    for (int i = 0; i < rungs; ++i) {
        const double eps = eps0 / std::pow(2.0, i);
        rung_spec.regulator_epsilon = eps;
        auto r = integrate_semiinfinite_regulated(
            [&](double w) { return w * std::cos(w * lag); }, rung_spec);
        if (!r.converged)
            throw ConvergenceError(
                "force correlation: regulated integral did not converge");
        ladder.emplace_back(eps, r.value);
    }
    auto ex = regulator_extrapolate(ladder);

    double thermal_excess = 0.0;
    if (beta > 0.0) {
        QuadratureSpec direct_spec = spec;
        direct_spec.regulator_epsilon = 0.0;
        auto r = integrate_semiinfinite_regulated(
            [&](double w) {
                const double x = beta * w;
                if (x > 360.0) return 0.0;
                return w * cothm1(x) * std::cos(w * lag);
            },
            direct_spec);
        if (!r.converged)
            throw ConvergenceError(
                "force correlation: thermal excess did not converge");
        thermal_excess = r.value;
    }

    ForceCorrelation out;
    out.dtau = lag;
    out.value = p.hbar / kPi * zeta * (ex.value + thermal_excess);
    out.epsilon_used = ladder.back().first;
    out.extrapolated = true;
    out.extrapolation_error =
        p.hbar / kPi * zeta * ex.error_estimate;
    return out;
}

} // namespace

double position_correlation_stationary(const PhysicalParams& p, double dt,
                                       const QuadratureSpec& spec) {
    auto integrand = [&](double w) {
        return std::imag(susceptibility(p, w)) *
               (p.T > 0.0 ? detail::coth(p.hbar * w / (2.0 * p.kB * p.T))
                          : 1.0) *
               std::cos(w * dt);
    };
    auto r = integrate_semiinfinite_regulated(integrand, spec);
    if (!r.converged)
        throw ConvergenceError(
            "position_correlation_stationary: quadrature did not converge");
    return p.hbar / kPi * r.value;
}

ForceCorrelation force_correlation_stationary(const PhysicalParams& p,
                                              double dt,
                                              const QuadratureSpec& spec) {
    if (dt == 0.0)
        throw SingularityError(
            "force_correlation_stationary diverges at dt = 0");
    const double beta =
        p.T > 0.0 ? p.hbar / (2.0 * p.kB * p.T) : 0.0;
    return regulated_force_correlation(p, dt, beta, spec);
}

ForceCorrelation force_correlation_moving(const PhysicalParams& p,
                                          double dtau,
                                          const QuadratureSpec& spec) {
    if (dtau == 0.0)
        throw SingularityError("force_correlation_moving diverges at dtau = 0");
    if (!(p.F > 0.0))
        throw DomainError("force_correlation_moving requires F > 0");
    return regulated_force_correlation(p, dtau, kPi * p.m * p.c / p.F, spec);
}

std::complex<double>
force_commutator_smeared(const PhysicalParams& p,
                         const std::function<double(double)>& testfn) {
    // f'(0) by central differences on a shrinking ladder, extrapolated.
    std::vector<std::pair<double, double>> ladder;
    for (int i = 0; i < 5; ++i) {
        const double h = 0.1 / std::pow(2.0, i);
        ladder.emplace_back(h, (testfn(h) - testfn(-h)) / (2.0 * h));
    }
    const double fprime = regulator_extrapolate(ladder).value;
    const double zeta = friction_constant(p);
    return {0.0, 2.0 * p.hbar * zeta * fprime};
}

std::complex<double> force_commutator_smeared_spectral(
    const PhysicalParams& p, const std::function<double(double)>& testfn,
    double support_halfwidth, const QuadratureSpec& spec) {
    const double zeta = friction_constant(p);

    // S(w) = int f(tau) sin(w tau) dtau over the support.
    auto sine_transform = [&](double w) {
        auto r = oscillatory_integral([&](double tau) { return testfn(tau); },
                                      w, -support_halfwidth,
                                      support_halfwidth, spec);
        return std::imag(r.value);
    };

    // int_0^inf w S(w) exp(-eps w) dw; S decays faster than any power for
    // smooth f, so the smeared frequency integral is absolutely
    // convergent and the regulator defaults to zero.
    auto r = integrate_semiinfinite_regulated(
        [&](double w) { return w * sine_transform(w); }, spec);
    if (!r.converged)
        throw ConvergenceError(
            "force_commutator_smeared_spectral: integral did not converge");
    return {0.0, 2.0 * p.hbar * zeta / kPi * r.value};
}

namespace {

double radiated_power_integrand(const PhysicalParams& p, double omega,
                                bool moving) {
    const double zeta = friction_constant(p);
    const std::complex<double> alpha = susceptibility(p, omega);
    const double weight = moving ? moving_omega_coth(p, omega)
                                 : thermal_omega_coth(p, omega);
    return omega * omega * zeta * zeta * std::norm(alpha) * weight;
}

double radiated_power(const PhysicalParams& p, const QuadratureSpec& spec,
                      bool moving) {
    if (!spec.cutoff_omega)
        throw DomainError(
            "radiated power diverges logarithmically: an explicit "
            "cutoff_omega is required");
    auto r = integrate_adaptive(
        [&](double w) { return radiated_power_integrand(p, w, moving); }, 0.0,
        *spec.cutoff_omega, spec);
    if (!r.converged)
        throw ConvergenceError("radiated power: quadrature did not converge");
    return p.hbar / kPi * r.value;
}

} // namespace

double radiated_power_moving(const PhysicalParams& p,
                             const QuadratureSpec& spec) {
    if (!(p.F > 0.0))
        throw DomainError("radiated_power_moving requires F > 0");
    return radiated_power(p, spec, true);
}

double radiated_power_stationary(const PhysicalParams& p,
                                 const QuadratureSpec& spec) {
    return radiated_power(p, spec, false);
}

double energy_balance_residual(const PhysicalParams& p,
                               const QuadratureSpec& spec) {
    const double zeta = friction_constant(p);
    const double cutoff = spec.cutoff_omega
                              ? *spec.cutoff_omega
                              : 100.0 * std::sqrt(p.K / p.m);
    // Radiated power integrand and work integrand; identical through
    // Im alpha = zeta omega |alpha|^2, but evaluated by different algebra.
    auto residual = [&](double w) {
        const std::complex<double> alpha = susceptibility(p, w);
        const double weight = thermal_omega_coth(p, w);
        const double radiated = w * w * zeta * zeta * std::norm(alpha) * weight;
        const double work = w * zeta * std::imag(alpha) * weight;
        return radiated - work;
    };
    QuadratureSpec rspec = spec;
    rspec.cutoff_omega.reset();
    auto r = integrate_adaptive(residual, 0.0, cutoff, rspec);
    return p.hbar / kPi * r.value;
}

} // namespace hypflux
