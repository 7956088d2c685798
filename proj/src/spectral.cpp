#include "hypflux/spectral.hpp"

#include <cmath>
#include <vector>

#include "hypflux/detail/math_util.hpp"
#include "hypflux/errors.hpp"
#include "hypflux/gamma.hpp"

namespace hypflux {

using detail::kPi;
using C = std::complex<double>;

std::complex<double> fourier_coefficient_closed(const PhysicalParams& p,
                                                double omega,
                                                double omega_prime) {
    if (!(omega > 0.0))
        throw DomainError("fourier_coefficient_closed requires omega > 0");
    if (omega_prime == 0.0)
        throw DomainError(
            "fourier_coefficient_closed: gamma pole at omega' = 0");
    const double a = p.m * p.c * omega_prime / p.F;
    const double b = p.m * p.c * omega / p.F;
    const C phase = std::exp(C(0.0, a * std::log(b)));
    return p.m * p.c / p.F * phase * std::exp(kPi * a / 2.0) *
           gamma_complex(C(0.0, -a));
}

namespace {

// int_0^inf z^{delta - 1 - i a} e^{i b z} dz, evaluated as written.  Split
// at z = 1: below it the log-frequency substitution u = log z tames the
// infinitely winding z^{-ia}; above it the e^{ibz} oscillation dominates
// and an integration-by-parts tail closes the range.
C regulated_kernel_integral(double a, double b, double delta,
                            const QuadratureSpec& spec) {
    // Head: u in [u_min, 0] of e^{delta u} e^{i b e^u} e^{-i a u}.
    const double u_min = -42.0 / delta;
    auto head_amp = [&](double u) {
        return std::exp(C(delta * u, b * std::exp(u)));
    };
    auto head = detail::oscillatory_integral_impl(
        [&](double u) { return head_amp(u) * std::exp(C(0.0, -a * u)); }, -a,
        u_min, 0.0, spec);

    // Mid: z in [1, Z] of z^{delta-1-ia} e^{ibz}.
    const double big_z = std::max(20.0, 2000.0 / b);
    const C p_exp(delta - 1.0, -a);
    auto mid = detail::oscillatory_integral_impl(
        [&](double z) {
            return std::exp(p_exp * std::log(z)) * std::exp(C(0.0, b * z));
        },
        b, 1.0, big_z, spec);

    // Tail: five integration-by-parts terms from Z.
    C tail = 0.0;
    const C ib(0.0, b);
    C factor = 1.0;
    for (int j = 0; j < 5; ++j) {
        const C zp = std::exp((p_exp - double(j)) * std::log(big_z));
        tail += factor * (-zp * std::exp(C(0.0, b * big_z)) / ib);
        factor *= -(p_exp - double(j)) / ib;
    }

    return head.value + mid.value + tail;
}

} // namespace

std::complex<double> fourier_coefficient_numeric_at_delta(
    const PhysicalParams& p, double omega, double omega_prime, double delta,
    const QuadratureSpec& spec) {
    if (!(omega > 0.0))
        throw DomainError("fourier_coefficient_numeric requires omega > 0");
    if (omega_prime == 0.0)
        throw DomainError("fourier_coefficient_numeric: omega' = 0");
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("fourier_coefficient_numeric: delta in (0,1)");
    const double a = p.m * p.c * omega_prime / p.F;
    const double b = p.m * p.c * omega / p.F;
    return p.m * p.c / p.F * regulated_kernel_integral(a, b, delta, spec);
}

std::complex<double> fourier_coefficient_numeric(const PhysicalParams& p,
                                                 double omega,
                                                 double omega_prime,
                                                 const QuadratureSpec& spec) {
    const double a = p.m * p.c * omega_prime / p.F;
    // The z -> 0 endpoint of int z^{delta-1-ia} contributes the simple
    // pole 1/(delta - ia); deflating it before extrapolating leaves a
    // ladder that is smooth on a scale of order one instead of |a|.
    const double delta0 =
        spec.regulator_epsilon > 0.0 ? spec.regulator_epsilon : 0.2;
    const int rungs = 6;
    const C pole_offset(0.0, -a);

    std::vector<std::pair<double, double>> re_ladder, im_ladder;
    for (int i = 0; i < rungs; ++i) {
        const double delta = delta0 / std::pow(2.0, i);
        const C v =
            fourier_coefficient_numeric_at_delta(p, omega, omega_prime, delta,
                                                 spec);
        const C deflated = (delta + pole_offset) * v;
        re_ladder.emplace_back(delta, deflated.real());
        im_ladder.emplace_back(delta, deflated.imag());
    }
    const C deflated_limit{regulator_extrapolate(re_ladder).value,
                           regulator_extrapolate(im_ladder).value};
    return deflated_limit / pole_offset;
}

SpectralKernel make_spectral_kernel(const PhysicalParams& p, double omega,
                                    double omega_prime) {
    SpectralKernel k;
    k.omega = omega;
    k.omega_prime = omega_prime;
    k.value = fourier_coefficient_closed(p, omega, omega_prime);
    return k;
}

SmearingFunction bump_function(double center, double halfwidth) {
    SmearingFunction s;
    s.lo = center - halfwidth;
    s.hi = center + halfwidth;
    s.fn = [center, halfwidth](double w) {
        const double x = (w - center) / halfwidth;
        if (std::abs(x) >= 1.0) return 0.0;
        return std::exp(1.0 - 1.0 / (1.0 - x * x));
    };
    return s;
}

namespace {

// G(v) = int g(w) e^{pi a/2} Gamma(-i a) e^{i a v} dw with a = mc w / F.
C smeared_kernel_transform(const PhysicalParams& p, const SmearingFunction& g,
                           double v, const QuadratureSpec& spec) {
    const double scale = p.m * p.c / p.F;
    auto amp = [&](double w) -> C {
        const double gw = g.fn(w);
        if (gw == 0.0) return {0.0, 0.0};
        const double a = scale * w;
        return gw * std::exp(kPi * a / 2.0) * gamma_complex(C(0.0, -a));
    };
    auto r = detail::oscillatory_integral_impl(
        [&](double w) { return amp(w) * std::exp(C(0.0, scale * w * v)); },
        scale * v, g.lo, g.hi, spec);
    return r.value;
}

} // namespace

DeltaKernelResult kernel_delta_identity_smeared(const PhysicalParams& p,
                                                const SmearingFunction& g,
                                                const SmearingFunction& h,
                                                const QuadratureSpec& spec) {
    if (!(g.lo > 0.0) || !(h.lo > 0.0))
        throw DomainError(
            "kernel_delta_identity_smeared: supports must lie in omega' > 0");

    const double scale = p.m * p.c / p.F;
    const double v_cutoff =
        spec.cutoff_omega ? std::log(scale * *spec.cutoff_omega) : 60.0;
    if (!(v_cutoff > 0.0))
        throw DomainError("kernel_delta_identity_smeared: cutoff too small");

    // lhs: (hbar/pi) (mc/F)^2 Re int_{-V}^{V} G_g(v) conj(G_h(v)) dv.
    QuadratureSpec inner = spec;
    inner.abs_tol = std::max(spec.abs_tol, 1e-12);
    auto integrand = [&](double v) {
        const C gg = smeared_kernel_transform(p, g, v, inner);
        const C hh = smeared_kernel_transform(p, h, v, inner);
        return std::real(gg * std::conj(hh));
    };
    QuadratureSpec outer = spec;
    outer.rel_tol = std::max(spec.rel_tol, 1e-7);
    auto lhs_integral = integrate_adaptive(integrand, -v_cutoff, v_cutoff,
                                           outer);

    // rhs: 2 pi hbar int g h e^{pi a}/(w sinh(pi a)) dw over the overlap.
    const double lo = std::max(g.lo, h.lo);
    const double hi = std::min(g.hi, h.hi);
    double rhs = 0.0;
    if (lo < hi) {
        auto rhs_integrand = [&](double w) {
            const double gh = g.fn(w) * h.fn(w);
            if (gh == 0.0) return 0.0;
            const double a = scale * w;
            // e^{pi a}/sinh(pi a) = 2/(1 - e^{-2 pi a})
            return gh * 2.0 / (1.0 - std::exp(-2.0 * kPi * a)) / w;
        };
        auto r = integrate_adaptive(rhs_integrand, lo, hi, spec);
        rhs = 2.0 * kPi * p.hbar * r.value;
    }

    DeltaKernelResult out;
    out.lhs = p.hbar / kPi * scale * scale * lhs_integral.value;
    out.rhs = rhs;
    out.v_cutoff = v_cutoff;
    return out;
}

} // namespace hypflux
