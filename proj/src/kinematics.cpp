#include "hypflux/kinematics.hpp"

#include <cmath>

#include "hypflux/detail/math_util.hpp"
#include "hypflux/errors.hpp"

namespace hypflux {

using detail::kPi;

Worldline make_worldline(const PhysicalParams& p) {
    if (!(p.F > 0.0))
        throw DomainError("worldline requires F > 0");
    return Worldline{p.m, p.c, p.F};
}

WorldlinePoint worldline_position(const Worldline& w, double tau) {
    return {w.y(tau), w.t(tau)};
}

double invariant_interval(const Worldline& w, double tau1, double tau2) {
    const double dtau = tau1 - tau2;
    return 2.0 * w.m * w.c / w.F *
           std::sinh(w.F * dtau / (2.0 * w.m * w.c));
}

double unruh_temperature(const PhysicalParams& p) {
    if (!(p.F > 0.0) || !(p.m > 0.0))
        throw DomainError("unruh_temperature requires F > 0 and m > 0");
    return p.hbar * p.F / (2.0 * kPi * p.m * p.c * p.kB);
}

RetardedTime retarded_time_closed(const Worldline& w, const FieldPoint& fp) {
    if (fp.y >= w.closest_approach())
        throw DomainError(
            "retarded_time_closed: field point not left of closest approach; "
            "use retarded_time_solve");
    const double s = fp.t + fp.y / w.c;
    if (s <= 0.0)
        throw CausalityError(
            "field point not yet causally connected (t + y/c <= 0)");
    RetardedTime r;
    r.tau_ret = w.m * w.c / w.F * std::log(w.F * s / (w.m * w.c));
    r.dilation = w.m * w.c / (w.F * s);
    return r;
}

namespace {

// Light-cone deficit t - t(tau) - |y - y(tau)|/c; strictly decreasing in
// tau, so any sign change brackets the unique root.
double cone_deficit(const Worldline& w, const FieldPoint& fp, double tau) {
    return fp.t - w.t(tau) - std::abs(fp.y - w.y(tau)) / w.c;
}

} // namespace

RetardedTime retarded_time_solve(const Worldline& w, const FieldPoint& fp) {
    if (fp.t + fp.y / w.c <= 0.0)
        throw CausalityError(
            "field point not yet causally connected (t + y/c <= 0)");

    // Initial bracket around the closed-form value when it applies,
    // otherwise expanded geometrically from tau = 0.
    double lo, hi;
    if (fp.y < w.closest_approach()) {
        const double tau0 = retarded_time_closed(w, fp).tau_ret;
        double step = std::max(1.0, 1e-2 * std::abs(tau0));
        lo = tau0 - step;
        hi = tau0 + step;
    } else {
        lo = -1.0;
        hi = 1.0;
    }
    // g is decreasing: need g(lo) > 0 > g(hi).
    const double tau_scale = w.m * w.c / w.F;
    for (int i = 0; i < 200 && cone_deficit(w, fp, lo) <= 0.0; ++i)
        lo -= tau_scale * std::pow(2.0, i / 4.0);
    for (int i = 0; i < 200 && cone_deficit(w, fp, hi) >= 0.0; ++i)
        hi += tau_scale * std::pow(2.0, i / 4.0);
    double g_lo = cone_deficit(w, fp, lo);
    double g_hi = cone_deficit(w, fp, hi);
    if (g_lo == 0.0) hi = lo;
    if (g_hi == 0.0) lo = hi;
    if (lo < hi && (!(g_lo > 0.0) || !(g_hi < 0.0)))
        throw ConvergenceError("retarded_time_solve: no root in search bracket");

    // Plain bisection: guaranteed bracket shrinkage, robust across the
    // |.| kink at on-worldline field points where secant steps stall.
    for (int iter = 0; iter < 160 && lo < hi; ++iter) {
        const double width = hi - lo;
        if (width <=
            1e-14 * std::max(1.0, std::max(std::abs(lo), std::abs(hi))))
            break;
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double g_mid = cone_deficit(w, fp, mid);
        if (g_mid > 0.0) {
            lo = mid;
        } else if (g_mid < 0.0) {
            hi = mid;
        } else {
            lo = hi = mid;
        }
    }
    const double tau = 0.5 * (lo + hi);

    RetardedTime r;
    r.tau_ret = tau;
    const double rapidity = w.rapidity(tau);
    const double side = detail::sgn(w.y(tau) - fp.y);
    r.dilation = 1.0 / (std::cosh(rapidity) + side * std::sinh(rapidity));
    return r;
}

} // namespace hypflux
