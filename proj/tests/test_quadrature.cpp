#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "hypflux/quadrature.hpp"

using namespace hypflux;

TEST_CASE("adaptive quadrature: elementary integrals") {
    auto one = integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0);
    CHECK(one.converged);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-12));

    auto sine = integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                                   M_PI);
    CHECK(sine.converged);
    CHECK(sine.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("adaptive quadrature: integrable endpoint singularity") {
    // antiderivative x - x log x
    auto r = integrate_adaptive([](double x) { return -std::log(x); }, 0.0,
                                1.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("adaptive quadrature: linearity and interval additivity") {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const double alpha = u(rng), beta = u(rng);
        auto f = [](double x) { return std::sin(3.0 * x) + 0.2 * x * x; };
        auto g = [](double x) { return std::exp(-x * x) * std::cos(x); };
        auto combo = [&](double x) { return alpha * f(x) + beta * g(x); };

        const double a = u(rng), b = a + 1.0 + std::abs(u(rng));
        const double lhs = integrate_adaptive(combo, a, b).value;
        const double rhs = alpha * integrate_adaptive(f, a, b).value +
                           beta * integrate_adaptive(g, a, b).value;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));

        const double c = 0.5 * (a + b) + 0.2 * u(rng);
        const double whole = integrate_adaptive(combo, a, b).value;
        const double split = integrate_adaptive(combo, a, c).value +
                             integrate_adaptive(combo, c, b).value;
        CHECK(whole == doctest::Approx(split).epsilon(1e-9));
    }
}

TEST_CASE("semi-infinite regulated: exponential decay, no regulator") {
    QuadratureSpec spec;
    spec.regulator_epsilon = 0.0;
    auto r = integrate_semiinfinite_regulated(
        [](double w) { return std::exp(-w); }, spec);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite regulated: damped sine and cosine closed forms") {
    // int_0^inf e^{-eps w} sin w dw = 1/(1+eps^2)
    for (double eps : {0.4, 0.2, 0.1}) {
        QuadratureSpec spec;
        spec.regulator_epsilon = eps;
        auto r = integrate_semiinfinite_regulated(
            [](double w) { return std::sin(w); }, spec);
        CHECK(r.converged);
        CHECK(r.value ==
              doctest::Approx(1.0 / (1.0 + eps * eps)).epsilon(1e-8));
    }
    // int_0^inf e^{-w} cos w dw = 1/2
    QuadratureSpec spec;
    spec.regulator_epsilon = 1.0;
    auto r = integrate_semiinfinite_regulated(
        [](double w) { return std::cos(w); }, spec);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("semi-infinite regulated: eps-independence when absolutely "
          "convergent") {
    QuadratureSpec spec;
    double base = 0.0;
    for (double eps : {0.0, 1e-5, 1e-4}) {
        spec.regulator_epsilon = eps;
        auto r = integrate_semiinfinite_regulated(
            [](double w) { return w * std::exp(-2.0 * w); }, spec);
        CHECK(r.converged);
        if (eps == 0.0) base = r.value;
        else CHECK(r.value == doctest::Approx(base).epsilon(1e-4));
    }
    CHECK(base == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("semi-infinite regulated: support away from the origin is "
          "still found") {
    // Gaussian centered at 40; early chunks are all zero.
    auto r = integrate_semiinfinite_regulated([](double w) {
        const double x = w - 40.0;
        return std::exp(-x * x);
    });
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-9));
}

TEST_CASE("semi-infinite regulated: non-convergent integrand is flagged") {
    QuadratureSpec spec;
    spec.regulator_epsilon = 0.0;
    spec.max_subdivisions = 4096;
    auto r = integrate_semiinfinite_regulated(
        [](double w) { return std::sin(w); }, spec);
    CHECK_FALSE(r.converged);
}

TEST_CASE("regulator extrapolation: damped-sine ladder reaches the limit") {
    std::vector<std::pair<double, double>> pts;
    for (double eps : {0.4, 0.2, 0.1}) {
        QuadratureSpec spec;
        spec.regulator_epsilon = eps;
        auto r = integrate_semiinfinite_regulated(
            [](double w) { return std::sin(w); }, spec);
        pts.emplace_back(eps, r.value);
    }
    auto ex = regulator_extrapolate(pts);
    CHECK(std::abs(ex.value - 1.0) < 1e-6);
}

TEST_CASE("regulator extrapolation: constant and linear data are exact") {
    std::vector<std::pair<double, double>> constant = {
        {0.4, 3.25}, {0.2, 3.25}, {0.1, 3.25}};
    CHECK(regulator_extrapolate(constant).value ==
          doctest::Approx(3.25).epsilon(1e-14));

    std::vector<std::pair<double, double>> linear = {
        {0.4, 1.0 + 2.0 * 0.4}, {0.2, 1.0 + 2.0 * 0.2}, {0.1, 1.0 + 2.0 * 0.1}};
    CHECK(regulator_extrapolate(linear).value ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("regulator extrapolation: fewer than three points is an error") {
    std::vector<std::pair<double, double>> two = {{0.2, 1.0}, {0.1, 1.0}};
    CHECK_THROWS_AS(regulator_extrapolate(two), DomainError);
}

TEST_CASE("oscillatory integral: full period, half period, zero frequency") {
    auto full = oscillatory_integral([](double) { return 1.0; }, 2.0 * M_PI,
                                     0.0, 1.0);
    CHECK(std::abs(full.value) < 1e-10);

    // (e^{i pi} - 1)/(i pi) = 2i/pi
    auto half = oscillatory_integral([](double) { return 1.0; }, M_PI, 0.0,
                                     1.0);
    CHECK(half.value.real() == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(half.value.imag() == doctest::Approx(2.0 / M_PI).epsilon(1e-10));

    auto ramp = oscillatory_integral([](double t) { return t; }, 0.0, 0.0,
                                     1.0);
    CHECK(ramp.value.real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ramp.value.imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("adaptive quadrature: repeat runs are bit-identical") {
    auto f = [](double x) { return std::cos(7.0 * x) / (1.0 + x * x); };
    const auto a = integrate_adaptive(f, 0.0, 20.0);
    const auto b = integrate_adaptive(f, 0.0, 20.0);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.subdivisions_used == b.subdivisions_used);
}

TEST_CASE("quadrature spec validation") {
    QuadratureSpec spec;
    CHECK(spec.violations().empty());
    spec.abs_tol = -1.0;
    spec.cutoff_omega = -5.0;
    auto v = spec.violations();
    CHECK(v.size() == 2);
}
