#include "hypflux/flux.hpp"

#include <array>
#include <cmath>

#include "hypflux/detail/math_util.hpp"
#include "hypflux/errors.hpp"
#include "hypflux/oscillator.hpp"

namespace hypflux {

using detail::kPi;

double free_field_flux(const PhysicalParams& p, const ModeSumConfig& cfg,
                       std::optional<double> unpaired_k) {
    const double n_real = cfg.L * cfg.k_max / (2.0 * kPi);
    if (n_real > 2e9)
        throw DomainError("free_field_flux: mode count overflow");
    const long n_max = static_cast<long>(n_real);

    const double thermal_scale =
        p.T > 0.0 ? p.hbar * p.c / (2.0 * p.kB * p.T) : 0.0;
    // j0 contribution of one mode: (hbar c^2 k / 2 L) coth(hbar omega/2 kB T);
    // odd in k because omega = c|k|.
    auto mode_flux = [&](double k) {
        const double weight =
            p.T > 0.0 ? detail::coth(thermal_scale * std::abs(k)) : 1.0;
        return p.hbar * p.c * p.c * k / (2.0 * cfg.L) * weight;
    };

    double sum = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        const double k = 2.0 * kPi * n / cfg.L;
        sum += mode_flux(k) + mode_flux(-k);
    }
    if (unpaired_k) sum += mode_flux(*unpaired_k);
    return sum;
}

namespace {

// {direct, interference} integrands on one grid:
//   direct:       omega^3 zeta^2 |alpha|^2 coth(..)
//   interference: omega^2 zeta  Im{alpha}  coth(..)
// Pointwise equal through Im alpha = zeta omega |alpha|^2.
struct FluxIntegrals {
    double direct = 0.0;
    double interference = 0.0;
    int subdivisions = 0;
};

FluxIntegrals flux_integral_pair(const PhysicalParams& p, double cutoff,
                                 const QuadratureSpec& spec, bool moving) {
    if (!(cutoff > 0.0))
        throw DomainError("flux: cutoff must be > 0");
    const double zeta = friction_constant(p);
    const double coth_scale = moving
                                  ? kPi * p.m * p.c / p.F
                                  : (p.T > 0.0
                                         ? p.hbar / (2.0 * p.kB * p.T)
                                         : 0.0);
    auto pair = [&](double w) -> std::array<double, 2> {
        const std::complex<double> alpha = susceptibility(p, w);
        const double wcoth = coth_scale > 0.0
                                 ? detail::omega_coth(w, coth_scale)
                                 : w;
        const double direct = w * w * zeta * zeta * std::norm(alpha) * wcoth;
        const double interference = w * zeta * std::imag(alpha) * wcoth;
        return {direct, interference};
    };
    auto r = integrate_adaptive_pair(pair, 0.0, cutoff, spec);
    if (!r.converged)
        throw ConvergenceError("flux: quadrature did not converge");
    FluxIntegrals out;
    out.direct = r.value[0];
    out.interference = r.value[1];
    out.subdivisions = r.subdivisions_used;
    return out;
}

double side_sign(Side s) { return s == Side::right ? 1.0 : -1.0; }

} // namespace

double direct_flux_stationary(const PhysicalParams& p, Side side,
                              double cutoff, const QuadratureSpec& spec) {
    const auto i = flux_integral_pair(p, cutoff, spec, false);
    return side_sign(side) * 0.5 * p.hbar / kPi * i.direct;
}

double interference_flux_stationary(const PhysicalParams& p, Side side,
                                    double cutoff,
                                    const QuadratureSpec& spec) {
    const auto i = flux_integral_pair(p, cutoff, spec, false);
    return -side_sign(side) * 0.5 * p.hbar / kPi * i.interference;
}

FluxReport net_flux_stationary(const PhysicalParams& p, Side side,
                               double cutoff, const QuadratureSpec& spec) {
    const auto i = flux_integral_pair(p, cutoff, spec, false);
    FluxReport rep;
    rep.side = side;
    rep.cutoff_omega = cutoff;
    rep.j_direct = side_sign(side) * 0.5 * p.hbar / kPi * i.direct;
    rep.j_interference = -side_sign(side) * 0.5 * p.hbar / kPi * i.interference;
    rep.j_free = free_field_flux(p);
    rep.j_net = rep.j_direct + rep.j_interference + rep.j_free;
    return rep;
}

namespace {

// Retarded-time factor for a left-side field point; nullopt when the
// point is not yet causally connected.
std::optional<RetardedTime> moving_dilation(const PhysicalParams& p,
                                            const FieldPoint& fp) {
    const Worldline w = make_worldline(p);
    if (fp.y >= w.closest_approach())
        throw DomainError(
            "moving flux is defined left of the point of closest approach");
    if (fp.t + fp.y / p.c <= 0.0) return std::nullopt;
    return retarded_time_closed(w, fp);
}

} // namespace

double direct_flux_moving(const PhysicalParams& p, const FieldPoint& fp,
                          double cutoff, const QuadratureSpec& spec) {
    const auto ret = moving_dilation(p, fp);
    if (!ret) return 0.0;
    const auto i = flux_integral_pair(p, cutoff, spec, true);
    const double d2 = ret->dilation * ret->dilation;
    return -d2 * 0.5 * p.hbar / kPi * i.direct;
}

double interference_flux_moving(const PhysicalParams& p, const FieldPoint& fp,
                                double cutoff, const QuadratureSpec& spec) {
    const auto ret = moving_dilation(p, fp);
    if (!ret) return 0.0;
    const auto i = flux_integral_pair(p, cutoff, spec, true);
    const double d2 = ret->dilation * ret->dilation;
    return d2 * 0.5 * p.hbar / kPi * i.interference;
}

FluxReport net_flux_moving(const PhysicalParams& p, const FieldPoint& fp,
                           double cutoff, const QuadratureSpec& spec) {
    FluxReport rep;
    rep.field_point = fp;
    rep.cutoff_omega = cutoff;

    const auto ret = moving_dilation(p, fp);
    if (!ret) {
        rep.causally_connected = false;
        return rep;
    }
    rep.dilation = ret->dilation;

    const auto i = flux_integral_pair(p, cutoff, spec, true);
    const double d2 = ret->dilation * ret->dilation;
    rep.j_direct = -d2 * 0.5 * p.hbar / kPi * i.direct;
    rep.j_interference = d2 * 0.5 * p.hbar / kPi * i.interference;
    rep.j_free = free_field_flux(p);
    rep.j_net = rep.j_direct + rep.j_interference + rep.j_free;
    return rep;
}

} // namespace hypflux
