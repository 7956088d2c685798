#include <cmath>
#include <complex>

#include "doctest.h"
#include "hypflux/errors.hpp"
#include "hypflux/gamma.hpp"
#include "hypflux/spectral.hpp"

using namespace hypflux;
using C = std::complex<double>;

TEST_CASE("closed kernel: modulus from the gamma identity, "
          "frequency-independent") {
    PhysicalParams p;
    p.m = 1.4;
    p.F = 0.9;
    const double scale = p.m * p.c / p.F;
    for (double op : {0.3, 1.0, 2.5, -0.7}) {
        const double a = scale * op;
        const double expected_sq = scale * scale * std::exp(M_PI * a) *
                                   M_PI / (a * std::sinh(M_PI * a));
        double first = 0.0;
        for (double omega : {0.25, 0.5, 1.0, 2.0, 7.0}) {
            const C c = fourier_coefficient_closed(p, omega, op);
            CHECK(std::norm(c) ==
                  doctest::Approx(expected_sq).epsilon(1e-12));
            if (first == 0.0) first = std::abs(c);
            CHECK(std::abs(c) == doctest::Approx(first).epsilon(1e-13));
        }
    }
}

TEST_CASE("closed kernel: trivial phase at unit frequency") {
    PhysicalParams p; // m = c = F = 1, so (mc omega/F)^{i a} = 1 at omega = 1
    for (double op : {0.4, 1.1}) {
        const C c = fourier_coefficient_closed(p, 1.0, op);
        const C expected =
            std::exp(M_PI * op / 2.0) * gamma_complex(C(0.0, -op));
        CHECK(std::abs(c - expected) <= 1e-14 * std::abs(expected));
    }
}

TEST_CASE("closed kernel: pole and domain errors") {
    PhysicalParams p;
    CHECK_THROWS_AS(fourier_coefficient_closed(p, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(fourier_coefficient_closed(p, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(fourier_coefficient_numeric_at_delta(p, 1.0, 1.0, 1.5),
                    DomainError);
}

TEST_CASE("numeric kernel: agrees with the closed form") {
    PhysicalParams p;
    p.m = 1.2;
    p.F = 0.8;
    for (double omega : {0.5, 2.0}) {
        for (double op : {0.3, 1.5}) {
            const C closed = fourier_coefficient_closed(p, omega, op);
            const C numeric = fourier_coefficient_numeric(p, omega, op);
            CHECK(std::abs(closed - numeric) <= 1e-6 * std::abs(closed));
        }
    }
}

TEST_CASE("numeric kernel: conjugation symmetry against the negative-"
          "wavenumber coefficient") {
    // The opposite-wavenumber coefficient in closed form is
    //   (mc/F) (mc omega/F)^{-ia} e^{pi a/2} Gamma(+ia),
    // the conjugate of the positive-wavenumber one.  The independent
    // numeric transform must satisfy the same relation.
    PhysicalParams p;
    p.m = 1.1;
    p.F = 0.9;
    const double omega = 0.7, op = 0.9;
    const double a = p.m * p.c * op / p.F;
    const double b = p.m * p.c * omega / p.F;
    const C negative_k = p.m * p.c / p.F *
                         std::exp(C(0.0, -a * std::log(b))) *
                         std::exp(M_PI * a / 2.0) * gamma_complex(C(0.0, a));

    const C closed = fourier_coefficient_closed(p, omega, op);
    CHECK(std::abs(std::conj(closed) - negative_k) <=
          1e-13 * std::abs(closed));

    const C numeric = fourier_coefficient_numeric(p, omega, op);
    CHECK(std::abs(std::conj(numeric) - negative_k) <=
          1e-6 * std::abs(numeric));
}

TEST_CASE("numeric kernel: ladder extrapolation consistent with single "
          "small-regulator evaluations") {
    PhysicalParams p;
    const double omega = 1.0, op = 0.7;
    const C extrapolated = fourier_coefficient_numeric(p, omega, op);
    const C coarse =
        fourier_coefficient_numeric_at_delta(p, omega, op, 0.02);
    const C fine =
        fourier_coefficient_numeric_at_delta(p, omega, op, 0.005);
    const double err_coarse = std::abs(coarse - extrapolated);
    const double err_fine = std::abs(fine - extrapolated);
    CHECK(err_fine < err_coarse);
    CHECK(err_fine <= 0.01 * std::abs(extrapolated));
}

TEST_CASE("delta kernel identity: bump fixture converges onto the "
          "diagonal weight") {
    PhysicalParams p;
    const auto g = bump_function(1.0, 0.5);
    QuadratureSpec spec;
    spec.cutoff_omega = std::exp(40.0);
    const auto r = kernel_delta_identity_smeared(p, g, g, spec);
    CHECK(r.v_cutoff == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(r.lhs / r.rhs == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("delta kernel identity: disjoint supports give zero") {
    PhysicalParams p;
    const auto g = bump_function(0.8, 0.15);
    const auto h = bump_function(1.3, 0.15);
    QuadratureSpec spec;
    spec.cutoff_omega = std::exp(60.0);
    const auto r = kernel_delta_identity_smeared(p, g, h, spec);
    CHECK(r.rhs == 0.0);
    CHECK(std::abs(r.lhs) < 1e-3);
}

TEST_CASE("delta kernel identity: diagonal side against an independent "
          "Simpson evaluation") {
    PhysicalParams p;
    p.m = 1.1;
    p.F = 1.3;
    const auto g = bump_function(1.0, 0.5);
    QuadratureSpec spec;
    spec.cutoff_omega = std::exp(30.0) * p.F / (p.m * p.c);
    const auto r = kernel_delta_identity_smeared(p, g, g, spec);

    const double scale = p.m * p.c / p.F;
    auto integrand = [&](double w) {
        const double gw = g.fn(w);
        if (gw == 0.0) return 0.0;
        const double a = scale * w;
        return gw * gw * 2.0 / (1.0 - std::exp(-2.0 * M_PI * a)) / w;
    };
    const int n = 20000; // even
    const double lo = g.lo, hi = g.hi, h = (hi - lo) / n;
    double sum = integrand(lo) + integrand(hi);
    for (int i = 1; i < n; ++i)
        sum += integrand(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    const double simpson = 2.0 * M_PI * p.hbar * sum * h / 3.0;
    CHECK(r.rhs == doctest::Approx(simpson).epsilon(1e-10));
}

TEST_CASE("delta kernel identity: supports must sit at positive frequency") {
    PhysicalParams p;
    SmearingFunction bad = bump_function(0.1, 0.5); // dips below zero
    CHECK_THROWS_AS(kernel_delta_identity_smeared(p, bad, bad, {}),
                    DomainError);
}

TEST_CASE("spectral kernel record: conjugate negative-wavenumber partner") {
    PhysicalParams p;
    p.F = 1.3;
    const auto k = make_spectral_kernel(p, 0.8, 1.1);
    CHECK(k.omega == 0.8);
    CHECK(k.omega_prime == 1.1);
    CHECK(k.value == fourier_coefficient_closed(p, 0.8, 1.1));
    CHECK(k.negative_wavenumber() == std::conj(k.value));
}

TEST_CASE("bump function: support and smoothness endpoints") {
    const auto g = bump_function(1.0, 0.5);
    CHECK(g.lo == 0.5);
    CHECK(g.hi == 1.5);
    CHECK(g.fn(1.0) == 1.0);
    CHECK(g.fn(0.5) == 0.0);
    CHECK(g.fn(1.5) == 0.0);
    CHECK(g.fn(0.4) == 0.0);
    CHECK(g.fn(1.2) > 0.0);
}
