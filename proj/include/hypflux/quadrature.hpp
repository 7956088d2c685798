#pragma once

// Adaptive quadrature services shared by all physics modules: a
// Gauss-Kronrod 7/15 panel rule with error-driven bisection, semi-infinite
// integrals with an exponential regulator exp(-eps*omega), oscillatory
// integrals on panels fine relative to the period, and extrapolation of a
// regulator ladder to its zero limit.
//
// Everything here is deterministic: panels are refined worst-error-first
// with a positional tie-break, and the final reduction is carried out in
// left-to-right interval order regardless of the refinement history.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypflux/errors.hpp"

namespace hypflux {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 1 << 18;
    /// Exponent of the regulator exp(-regulator_epsilon * omega) applied by
    /// integrate_semiinfinite_regulated.  Zero means no regulator.
    double regulator_epsilon = 0.0;
    /// Optional hard frequency cutoff; when present, semi-infinite
    /// integrals run over [0, cutoff_omega] instead of [0, inf).
    std::optional<double> cutoff_omega;

    std::vector<std::string> violations() const {
        std::vector<std::string> v;
        if (!(abs_tol > 0.0)) v.push_back("abs_tol must be > 0");
        if (!(rel_tol > 0.0)) v.push_back("rel_tol must be > 0");
        if (max_subdivisions < 1) v.push_back("max_subdivisions must be >= 1");
        if (!(regulator_epsilon >= 0.0))
            v.push_back("regulator_epsilon must be >= 0");
        if (cutoff_omega && !(*cutoff_omega > 0.0))
            v.push_back("cutoff_omega must be > 0 when present");
        return v;
    }
};

template <typename V>
struct IntegralResult {
    V value{};
    double error_estimate = 0.0;
    int subdivisions_used = 0;
    bool converged = false;
};

struct ExtrapolationResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

namespace detail {

// QUADPACK dqk15 abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

inline double vnorm(double x) { return std::abs(x); }
inline double vnorm(const std::complex<double>& x) { return std::abs(x); }
template <std::size_t N>
double vnorm(const std::array<double, N>& x) {
    double n = 0.0;
    for (double v : x) n = std::max(n, std::abs(v));
    return n;
}

inline void vaxpy(double& acc, double w, double x) { acc += w * x; }
inline void vaxpy(std::complex<double>& acc, double w,
                  const std::complex<double>& x) {
    acc += w * x;
}
template <std::size_t N>
void vaxpy(std::array<double, N>& acc, double w,
           const std::array<double, N>& x) {
    for (std::size_t i = 0; i < N; ++i) acc[i] += w * x[i];
}

template <typename V>
struct Panel {
    double a, b;
    V value{};
    double error = 0.0;
};

// One Gauss-Kronrod 7/15 evaluation on [a, b].  The 15-point Kronrod sum
// is the panel value; |K15 - G7| rescaled the QUADPACK way is the error.
// No endpoint is ever evaluated.
template <typename V, typename F>
Panel<V> gk15(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    V kron{};
    V gauss{};
    double resabs = 0.0;

    for (std::size_t i = 0; i + 1 < 8; ++i) {
        const double x = kKronrodNodes[i];
        V f1 = f(mid - half * x);
        V f2 = f(mid + half * x);
        vaxpy(kron, kKronrodWeights[i], f1);
        vaxpy(kron, kKronrodWeights[i], f2);
        resabs += kKronrodWeights[i] * (vnorm(f1) + vnorm(f2));
        if (i % 2 == 1) {
            vaxpy(gauss, kGaussWeights[i / 2], f1);
            vaxpy(gauss, kGaussWeights[i / 2], f2);
        }
    }
    V fc = f(mid);
    vaxpy(kron, kKronrodWeights[7], fc);
    vaxpy(gauss, kGaussWeights[3], fc);
    resabs += kKronrodWeights[7] * vnorm(fc);

    V diff = kron;
    vaxpy(diff, -1.0, gauss);
    double err = vnorm(diff) * std::abs(half);
    resabs *= std::abs(half);
    if (resabs > 0.0 && err > 0.0) {
        const double scaled = 200.0 * err / resabs;
        err = resabs * std::min(1.0, scaled * std::sqrt(scaled));
    }

    Panel<V> p;
    p.a = a;
    p.b = b;
    vaxpy(p.value, half, kron);
    p.error = err;
    return p;
}

template <typename V, typename F>
IntegralResult<V> integrate_adaptive_impl(F&& f, double a, double b,
                                          const QuadratureSpec& spec) {
    IntegralResult<V> out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::vector<Panel<V>> panels;
    panels.push_back(gk15<V>(f, a, b));
    int subdivisions = 0;

    const double min_width =
        8.0 * std::numeric_limits<double>::epsilon() *
        std::max({std::abs(a), std::abs(b), 1.0});

    // Running totals, updated incrementally on each split; the final
    // result is re-summed in interval order below.
    V total = panels.front().value;
    double total_err = panels.front().error;

    while (true) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * vnorm(total));
        bool done = total_err <= tol || subdivisions >= spec.max_subdivisions;

        std::size_t worst = 0;
        if (!done) {
            for (std::size_t i = 1; i < panels.size(); ++i) {
                if (panels[i].error > panels[worst].error ||
                    (panels[i].error == panels[worst].error &&
                     panels[i].a < panels[worst].a))
                    worst = i;
            }
            // Roundoff floor: the dominant panel can no longer be split.
            if (panels[worst].b - panels[worst].a < min_width) done = true;
        }

        if (done) {
            // Fixed reduction order: sum panels left to right.
            std::sort(panels.begin(), panels.end(),
                      [](const Panel<V>& x, const Panel<V>& y) {
                          return x.a < y.a;
                      });
            V value{};
            double err = 0.0;
            for (const auto& p : panels) {
                vaxpy(value, 1.0, p.value);
                err += p.error;
            }
            out.value = value;
            out.error_estimate = err;
            out.subdivisions_used = subdivisions;
            out.converged =
                err <= std::max(spec.abs_tol, spec.rel_tol * vnorm(value));
            return out;
        }

        const Panel<V> p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        panels[worst] = gk15<V>(f, p.a, mid);
        panels.push_back(gk15<V>(f, mid, p.b));
        ++subdivisions;

        vaxpy(total, -1.0, p.value);
        vaxpy(total, 1.0, panels[worst].value);
        vaxpy(total, 1.0, panels.back().value);
        total_err += panels[worst].error + panels.back().error - p.error;
        total_err = std::max(total_err, 0.0);
    }
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b].  Endpoints are
/// never evaluated, so integrable endpoint singularities (log, inverse
/// square root) are handled by refinement alone.
template <typename F>
IntegralResult<double> integrate_adaptive(F&& f, double a, double b,
                                          const QuadratureSpec& spec = {}) {
    return detail::integrate_adaptive_impl<double>(std::forward<F>(f), a, b,
                                                   spec);
}

template <typename F>
IntegralResult<std::complex<double>>
integrate_adaptive_complex(F&& f, double a, double b,
                           const QuadratureSpec& spec = {}) {
    return detail::integrate_adaptive_impl<std::complex<double>>(
        std::forward<F>(f), a, b, spec);
}

/// Two integrands evaluated on one shared adaptive grid.  Needed where a
/// cancellation theorem must survive far below the quadrature tolerance:
/// both components see identical panels, so pointwise algebra between the
/// integrands transfers to the sums.
template <typename F>
IntegralResult<std::array<double, 2>>
integrate_adaptive_pair(F&& f, double a, double b,
                        const QuadratureSpec& spec = {}) {
    return detail::integrate_adaptive_impl<std::array<double, 2>>(
        std::forward<F>(f), a, b, spec);
}

/// Integral of f(w) exp(-eps w) over [0, inf), eps = spec.regulator_epsilon.
/// When spec.cutoff_omega is set the range is [0, cutoff] instead.  The
/// semi-infinite range is covered by chunks growing geometrically from
/// [0, 1]; at least [0, 63] is always examined, so the integrand's
/// significant support must be reachable from the origin on that scale.
/// The result is flagged unconverged if the chunk sequence fails to die
/// out within the budget.
template <typename F>
IntegralResult<double>
integrate_semiinfinite_regulated(F&& f, const QuadratureSpec& spec = {}) {
    const double eps = spec.regulator_epsilon;
    auto damped = [&](double w) { return f(w) * std::exp(-eps * w); };

    if (spec.cutoff_omega)
        return integrate_adaptive(damped, 0.0, *spec.cutoff_omega, spec);

    QuadratureSpec chunk_spec = spec;

    IntegralResult<double> out;
    double a = 0.0;
    double len = 1.0;
    int negligible_streak = 0;
    const int min_chunks = 6;
    const int max_chunks = 64;

    for (int chunk = 0; chunk < max_chunks; ++chunk) {
        chunk_spec.abs_tol = std::max(
            0.05 * std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value)),
            1e-300);
        auto r = integrate_adaptive(damped, a, a + len, chunk_spec);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.subdivisions_used += r.subdivisions_used;
        if (!r.converged) {
            out.converged = false;
            return out;
        }
        a += len;
        len *= 2.0;

        const double tail_tol =
            0.25 * std::max(spec.abs_tol, spec.rel_tol * std::abs(out.value));
        if (std::abs(r.value) + r.error_estimate <= tail_tol)
            ++negligible_streak;
        else
            negligible_streak = 0;
        if (negligible_streak >= 2 && chunk + 1 >= min_chunks) {
            out.converged = true;
            return out;
        }
    }
    out.converged = false;
    return out;
}

namespace detail {

template <typename F>
IntegralResult<std::complex<double>>
oscillatory_integral_impl(F&& g, double frequency, double a, double b,
                          const QuadratureSpec& spec) {
    using C = std::complex<double>;
    IntegralResult<C> out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    double panel_width = b - a;
    if (frequency != 0.0) {
        const double period = 2.0 * M_PI / std::abs(frequency);
        panel_width = std::min(panel_width, period / 8.0);
    }
    const int n_panels =
        std::max(1, static_cast<int>(std::ceil((b - a) / panel_width)));

    QuadratureSpec panel_spec = spec;
    panel_spec.abs_tol = spec.abs_tol / n_panels;

    out.converged = true;
    for (int i = 0; i < n_panels; ++i) {
        const double pa = a + (b - a) * i / n_panels;
        const double pb = a + (b - a) * (i + 1) / n_panels;
        auto r = integrate_adaptive_impl<C>(g, pa, pb, panel_spec);
        out.value += r.value;
        out.error_estimate += r.error_estimate;
        out.subdivisions_used += r.subdivisions_used;
        out.converged = out.converged && r.converged;
    }
    return out;
}

} // namespace detail

/// Integral of amplitude(t) * exp(i * frequency * t) over [a, b].  The
/// interval is pre-split into panels no wider than an eighth of the period
/// before adaptive refinement, so the error estimator never sees whole
/// oscillations.  frequency may be zero or negative; the amplitude may be
/// real- or complex-valued.  A Filon- or Levin-type rule could replace
/// the panel scheme behind this interface if much larger frequencies are
/// ever needed; the moderate frequencies used here do not warrant it.
template <typename F>
IntegralResult<std::complex<double>>
oscillatory_integral(F&& amplitude, double frequency, double a, double b,
                     const QuadratureSpec& spec = {}) {
    using C = std::complex<double>;
    auto g = [&](double t) -> C {
        return C(amplitude(t)) * std::exp(C(0.0, frequency * t));
    };
    return detail::oscillatory_integral_impl(g, frequency, a, b, spec);
}

/// Extrapolate samples (eps_i, value_i) of a regulated quantity to the
/// eps -> 0 limit.  Rational (Bulirsch-Stoer) extrapolation with a
/// polynomial fallback wherever the rational recurrence degenerates; the
/// error estimate is the size of the last diagonal correction.  Requires
/// at least three points.
ExtrapolationResult
regulator_extrapolate(std::span<const std::pair<double, double>> samples);

inline ExtrapolationResult regulator_extrapolate(
    const std::vector<std::pair<double, double>>& samples) {
    return regulator_extrapolate(
        std::span<const std::pair<double, double>>(samples));
}

} // namespace hypflux
