#include <cmath>
#include <random>

#include "doctest.h"
#include "hypflux/errors.hpp"
#include "hypflux/kinematics.hpp"

using namespace hypflux;

TEST_CASE("worldline: turning point and explicit position") {
    const Worldline w = make_worldline(natural_units());
    const auto turning = worldline_position(w, 0.0);
    CHECK(turning.y == 1.0); // m c^2 / F
    CHECK(turning.t == 0.0);

    const auto pos = worldline_position(w, 1.0);
    CHECK(pos.y == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(pos.t == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
}

TEST_CASE("worldline: hyperbola identity and subluminal velocity") {
    PhysicalParams p;
    p.m = 2.0;
    p.c = 1.5;
    p.F = 0.7;
    const Worldline w = make_worldline(p);
    const double r0 = w.closest_approach();
    for (int i = -20; i <= 20; ++i) {
        const double tau = 0.4 * i;
        const auto pos = worldline_position(w, tau);
        const double lhs =
            pos.y * pos.y - p.c * p.c * pos.t * pos.t;
        CHECK(std::abs(lhs - r0 * r0) <= 1e-12 * r0 * r0 *
              std::max(1.0, std::cosh(w.rapidity(tau))));
        CHECK(std::abs(w.velocity(tau)) < p.c);
    }
}

TEST_CASE("invariant interval: closed form vs worldline-point oracle") {
    const Worldline w = make_worldline(natural_units());
    CHECK(invariant_interval(w, 0.7, 0.7) == 0.0);

    // oracle: both points from the parametric trajectory
    const double tau1 = 1.4, tau2 = -0.6; // lag 2
    const auto p1 = worldline_position(w, tau1);
    const auto p2 = worldline_position(w, tau2);
    const double oracle =
        std::sqrt((p1.t - p2.t) * (p1.t - p2.t) -
                  (p1.y - p2.y) * (p1.y - p2.y));
    CHECK(invariant_interval(w, tau1, tau2) ==
          doctest::Approx(2.0 * std::sinh(1.0)).epsilon(1e-14));
    CHECK(invariant_interval(w, tau1, tau2) ==
          doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("invariant interval: proper-time limit, antisymmetry, shift") {
    PhysicalParams p;
    p.m = 1.3;
    p.F = 0.9;
    const Worldline w = make_worldline(p);

    // small lag: interval -> dtau + O(dtau^3)
    for (double dtau : {1e-3, 1e-4, 1e-5}) {
        const double s = invariant_interval(w, dtau, 0.0);
        CHECK(std::abs(s - dtau) <= dtau * dtau * dtau);
    }

    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int i = 0; i < 50; ++i) {
        const double t1 = u(rng), t2 = u(rng), shift = u(rng);
        CHECK(invariant_interval(w, t1, t2) ==
              doctest::Approx(-invariant_interval(w, t2, t1)).epsilon(1e-14));
        CHECK(invariant_interval(w, t1 + shift, t2 + shift) ==
              doctest::Approx(invariant_interval(w, t1, t2)).epsilon(1e-12));
    }
}

TEST_CASE("unruh temperature: value and linearity in the force") {
    const auto p = natural_units();
    CHECK(unruh_temperature(p) ==
          doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-15));
    CHECK(unruh_temperature(p) == doctest::Approx(0.1591549).epsilon(1e-6));

    auto p2 = p;
    p2.F = 2.0;
    CHECK(unruh_temperature(p2) ==
          doctest::Approx(2.0 * unruh_temperature(p)).epsilon(1e-15));
}

TEST_CASE("retarded time, closed form: log values and causality") {
    const Worldline w = make_worldline(natural_units());

    const auto origin = retarded_time_closed(w, {0.0, 1.0});
    CHECK(origin.tau_ret == 0.0);
    CHECK(origin.dilation == 1.0);

    const auto later = retarded_time_closed(w, {0.0, std::exp(1.0)});
    CHECK(later.tau_ret == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(later.dilation ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

    // dilation blows up toward the causal boundary t + y/c -> 0+
    double prev = 0.0;
    for (double s : {1e-2, 1e-4, 1e-6}) {
        const double d = retarded_time_closed(w, {-1.0, 1.0 + s}).dilation;
        CHECK(d > prev);
        prev = d;
    }
    CHECK(prev > 1e5);

    CHECK_THROWS_AS(retarded_time_closed(w, {0.0, -0.5}), CausalityError);
    CHECK_THROWS_AS(retarded_time_closed(w, {2.0, 5.0}), DomainError);
}

TEST_CASE("retarded time, root solve: matches closed form") {
    const Worldline w = make_worldline(natural_units());
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> uy(-5.0, 0.9);
    std::uniform_real_distribution<double> us(1e-2, 30.0);
    for (int i = 0; i < 200; ++i) {
        const double y = uy(rng);
        const FieldPoint fp{y, -y + us(rng)};
        const auto closed = retarded_time_closed(w, fp);
        const auto solved = retarded_time_solve(w, fp);
        CHECK(std::abs(solved.tau_ret - closed.tau_ret) <=
              1e-10 * std::max(1.0, std::abs(closed.tau_ret)));
        CHECK(std::abs(solved.dilation - closed.dilation) <=
              1e-8 * closed.dilation);
    }
    CHECK(retarded_time_solve(w, {0.0, 1.0}).tau_ret ==
          doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("retarded time, root solve: on-worldline fixed point") {
    PhysicalParams p;
    p.m = 0.8;
    p.F = 1.7;
    const Worldline w = make_worldline(p);
    for (double tau0 : {-2.5, -0.4, 0.0, 0.9, 3.1}) {
        const auto pos = worldline_position(w, tau0);
        const auto r = retarded_time_solve(w, {pos.y, pos.t});
        CHECK(std::abs(r.tau_ret - tau0) <=
              1e-10 * std::max(1.0, std::abs(tau0)));
    }
    CHECK_THROWS_AS(retarded_time_solve(w, {0.0, -1.0}), CausalityError);
}

TEST_CASE("retarded time: solve after position is the identity") {
    const Worldline w = make_worldline(natural_units());
    // a field point strictly left of the trajectory, reached by solver
    // and closed form alike; dilation against a central difference
    const FieldPoint fp{-0.7, 2.3};
    const auto r = retarded_time_solve(w, fp);
    const double h = 1e-5;
    const double fd =
        (retarded_time_solve(w, {fp.y, fp.t + h}).tau_ret -
         retarded_time_solve(w, {fp.y, fp.t - h}).tau_ret) /
        (2.0 * h);
    CHECK(r.dilation == doctest::Approx(fd).epsilon(1e-8));
}
