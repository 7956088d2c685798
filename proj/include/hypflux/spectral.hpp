#pragma once

// Fourier kernel of the hyperbolic worldline: the coefficient c(k; w') in
// closed gamma-function form, a numeric oracle that integrates the
// unrotated defining integral (so the contour rotation behind the closed
// form is verified rather than trusted), and the smeared delta-function
// identity satisfied by the kernel product.

#include <complex>
#include <functional>

#include "hypflux/params.hpp"
#include "hypflux/quadrature.hpp"

namespace hypflux {

/// Closed form of the Fourier coefficient for positive k = omega/c:
///   c(omega/c; omega') = (mc/F) (mc omega/F)^{i mc omega'/F}
///                        e^{pi mc omega'/2F} Gamma(-i mc omega'/F).
/// The base of the complex power is a positive real, taken with the real
/// logarithm; no branch cut is crossed.  Throws at omega' = 0 (gamma pole)
/// and requires omega > 0.
std::complex<double> fourier_coefficient_closed(const PhysicalParams& p,
                                                double omega,
                                                double omega_prime);

/// Numeric oracle for the same coefficient: the substitution
/// z = exp(-F tau / mc) turns the defining proper-time integral into
///   (mc/F) int_0^inf z^{-1 - i mc omega'/F} e^{+i mc omega z/F} dz,
/// which is evaluated as written (no rotation), with a z^delta endpoint
/// regulator extrapolated to delta -> 0.  spec.regulator_epsilon, when
/// positive, sets the largest delta rung.
std::complex<double> fourier_coefficient_numeric(const PhysicalParams& p,
                                                 double omega,
                                                 double omega_prime,
                                                 const QuadratureSpec& spec = {});

/// Same oracle at a single regulator value, no extrapolation.  Exposed so
/// the ladder can be checked against a one-shot small-delta evaluation.
std::complex<double> fourier_coefficient_numeric_at_delta(
    const PhysicalParams& p, double omega, double omega_prime, double delta,
    const QuadratureSpec& spec = {});

/// Fourier coefficient tagged with its frequencies.  The negative-
/// wavenumber partner is the conjugate, so only omega > 0 is stored.
struct SpectralKernel {
    double omega = 0.0;
    double omega_prime = 0.0;
    std::complex<double> value;

    std::complex<double> negative_wavenumber() const {
        return std::conj(value);
    }
};

SpectralKernel make_spectral_kernel(const PhysicalParams& p, double omega,
                                    double omega_prime);

/// Smooth weight with known compact support on omega' > 0.
struct SmearingFunction {
    std::function<double(double)> fn;
    double lo = 0.0;
    double hi = 0.0;
};

/// C-infinity bump exp(1 - 1/(1 - x^2)) with x = (w - center)/halfwidth,
/// supported on [center - halfwidth, center + halfwidth].
SmearingFunction bump_function(double center, double halfwidth);

struct DeltaKernelResult {
    double lhs = 0.0;
    double rhs = 0.0;
    /// Log-frequency half-range of the kernel integral; the frequency
    /// integral ran over [F e^{-v}/mc, F e^{v}/mc].
    double v_cutoff = 0.0;
};

/// Both sides of the smeared kernel identity
///   int int g(w1) h(w2) [sum_k (hbar c/L w) c(k;w1) c(k;w2)*] dw1 dw2
///     -> 2 pi hbar int g(w) h(w) e^{pi mc w/F} / (w sinh(pi mc w/F)) dw,
/// with the frequency integral hiding in the kernel cut off symmetrically
/// in log frequency at +-v_cutoff (spec.cutoff_omega, when set, supplies
/// v_cutoff = log(mc cutoff/F)).  lhs -> rhs as the cutoff grows.
DeltaKernelResult kernel_delta_identity_smeared(const PhysicalParams& p,
                                                const SmearingFunction& g,
                                                const SmearingFunction& h,
                                                const QuadratureSpec& spec = {});

} // namespace hypflux
