#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "floatopt/drift.hpp"

using namespace floatopt;

namespace {

// k_eff = k via k_torque = k, current = 1, k_bias = 0.
DriftParams make_params(double mass, double viscous, double k_eff, double disturbance) {
    DriftParams p;
    p.mass = mass;
    p.viscous = viscous;
    p.k_torque = k_eff;
    p.current = 1.0;
    p.k_bias = 0.0;
    p.disturbance = disturbance;
    return p;
}

// Demo parameters: critical damping with unit steady state.
const DriftParams kDemo{1.0, 2.0, 1.0, 2.0, 1.0, 1.0};

}  // namespace

TEST_CASE("effective stiffness") {
    CHECK(effective_stiffness(DriftParams{1.0, 0.0, 1.0, 2.0, 1.0, 0.0}) ==
          doctest::Approx(1.0));
    CHECK(effective_stiffness(DriftParams{1.0, 0.0, 1.0, 1.0, 0.0, 0.0}) ==
          doctest::Approx(-1.0));
    CHECK(effective_stiffness(DriftParams{1.0, 0.0, 1.0, 1.0, 1.0, 0.0}) ==
          doctest::Approx(0.0));
}

TEST_CASE("parameter validation") {
    DriftParams bad = kDemo;
    bad.mass = 0.0;
    CHECK_THROWS_AS(effective_stiffness(bad), std::invalid_argument);
    bad = kDemo;
    bad.viscous = -1.0;
    CHECK_THROWS_AS(drift_response(bad, 1.0), std::invalid_argument);
    bad = kDemo;
    bad.disturbance = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(drift_response(bad, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(drift_response(kDemo, -1.0), std::invalid_argument);
}

TEST_CASE("critically damped response matches the closed form") {
    CHECK(effective_stiffness(kDemo) == doctest::Approx(1.0));
    CHECK(drift_response(kDemo, 1.0) == doctest::Approx(0.2642411176571153).epsilon(1e-12));
    CHECK(drift_response(kDemo, 0.0) == doctest::Approx(0.0));
    // approaches d / k_eff
    CHECK(drift_response(kDemo, 80.0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("zero disturbance stays parked") {
    DriftParams p = kDemo;
    p.disturbance = 0.0;
    CHECK(drift_response(p, 5.0) == doctest::Approx(0.0));
    CHECK(max_drift(p, 5.0) == doctest::Approx(0.0));
    const DriftTrace trace = simulate_drift(p, 1.0, 1e-3);
    for (double x : trace.positions) CHECK(x == doctest::Approx(0.0));
}

TEST_CASE("closed form tracks the integrator in every regime") {
    const DriftParams regimes[] = {
        make_params(1.0, 1.0, 4.0, 1.0),   // underdamped
        make_params(1.0, 2.0, 1.0, 1.0),   // critically damped
        make_params(1.0, 4.0, 1.0, 1.0),   // overdamped
        make_params(1.0, 1.0, 0.0, 1.0),   // zero stiffness, damped
        make_params(1.0, 0.0, 0.0, 1.0),   // zero stiffness, free
        make_params(1.0, 1.0, -1.0, 1.0),  // negative stiffness
    };
    for (const DriftParams& p : regimes) {
        const DriftTrace trace = simulate_drift(p, 10.0, 1e-3);
        for (std::size_t i = 0; i < trace.times.size(); i += 100) {
            const double closed = drift_response(p, trace.times[i]);
            const double tolerance = 1e-6 * std::max(1.0, std::abs(closed));
            CHECK(std::abs(closed - trace.positions[i]) <= tolerance);
        }
    }
}

TEST_CASE("response is linear in the disturbance") {
    const DriftParams base = make_params(1.0, 1.0, 4.0, 1.0);
    for (double factor : {0.5, 2.0, 10.0}) {
        DriftParams scaled = base;
        scaled.disturbance = factor;
        for (double t : {0.3, 1.0, 4.0, 9.0}) {
            const double expected = factor * drift_response(base, t);
            CHECK(drift_response(scaled, t) ==
                  doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("undamped oscillation peaks at twice the static deflection") {
    const DriftParams p = make_params(1.0, 0.0, 1.0, 1.0);
    CHECK(drift_response(p, std::numbers::pi) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(max_drift(p, 10.0) == doctest::Approx(2.0).epsilon(1e-9));
    const DriftTrace trace = simulate_drift(p, 10.0, 1e-4);
    const double peak =
        *std::max_element(trace.positions.begin(), trace.positions.end());
    CHECK(peak == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("integrator matches the hand value for critical damping") {
    const DriftTrace trace = simulate_drift(kDemo, 1.0, 1e-4);
    CHECK(trace.times.front() == 0.0);
    CHECK(trace.positions.front() == 0.0);
    CHECK(trace.velocities.front() == 0.0);
    CHECK(trace.positions.back() == doctest::Approx(0.2642411176571153).epsilon(1e-8));
}

TEST_CASE("integrator reports divergence for runaway drift") {
    const DriftParams p = make_params(1.0, 0.0, -5.0, 1.0);
    CHECK_THROWS_WITH_AS(simulate_drift(p, 2000.0, 0.01), "integration diverged",
                         std::runtime_error);
}

TEST_CASE("integrator validates its window") {
    CHECK_THROWS_AS(simulate_drift(kDemo, 0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(simulate_drift(kDemo, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(simulate_drift(kDemo, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("running max follows the trace maximum") {
    const DriftParams regimes[] = {
        make_params(1.0, 1.0, 4.0, 1.0),  make_params(1.0, 2.0, 1.0, 1.0),
        make_params(1.0, 4.0, 1.0, 1.0),  make_params(1.0, 1.0, 0.0, 1.0),
        make_params(1.0, 1.0, -1.0, 1.0),
    };
    for (const DriftParams& p : regimes) {
        for (double horizon : {0.5, 2.0, 8.0}) {
            const DriftTrace trace = simulate_drift(p, horizon, 1e-4);
            const double traced =
                *std::max_element(trace.positions.begin(), trace.positions.end());
            CHECK(max_drift(p, horizon) == doctest::Approx(traced).epsilon(1e-6));
        }
    }
    CHECK(max_drift(kDemo, 1.0) == doctest::Approx(0.2642411176571153).epsilon(1e-9));
}

TEST_CASE("running max never decreases with the horizon") {
    const DriftParams p = make_params(1.0, 0.5, 4.0, 1.0);
    double previous = 0.0;
    for (double horizon = 0.25; horizon <= 12.0; horizon += 0.25) {
        const double current = max_drift(p, horizon);
        CHECK(current >= previous - 1e-12);
        previous = current;
    }
}

TEST_CASE("negative disturbance never drifts toward positive clearance") {
    DriftParams p = kDemo;
    p.disturbance = -1.0;
    CHECK(max_drift(p, 10.0) == doctest::Approx(0.0));
    CHECK(wakeup_period(p, 0.5) == std::numeric_limits<double>::infinity());
}

TEST_CASE("wake-up period for the demo parameters") {
    const double period = wakeup_period(kDemo, 0.5);
    CHECK(std::abs(period - 1.6783) <= 1e-3);
    CHECK(std::abs(max_drift(kDemo, period) - 0.5) <= 1e-6);
    CHECK(max_drift(kDemo, 0.999 * period) < 0.5);
    // cross-check against the integrator, with a step dividing the period
    const auto n_steps = static_cast<std::size_t>(std::ceil(period / 1e-4));
    const DriftTrace trace = simulate_drift(kDemo, period, period / static_cast<double>(n_steps));
    CHECK(trace.positions.back() == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("clearance above the all-time peak never wakes") {
    CHECK(wakeup_period(kDemo, 1.5) == std::numeric_limits<double>::infinity());
    // underdamped: the first overshoot peak is the supremum
    const DriftParams osc = make_params(1.0, 0.5, 4.0, 1.0);
    const double peak = max_drift(osc, 100.0);
    CHECK(wakeup_period(osc, peak * 1.01) == std::numeric_limits<double>::infinity());
    CHECK(std::isfinite(wakeup_period(osc, peak * 0.99)));
}

TEST_CASE("unstable drift always crosses the clearance") {
    const DriftParams p = make_params(1.0, 1.0, -1.0, 0.5);
    const double period = wakeup_period(p, 1000.0);
    CHECK(std::isfinite(period));
    CHECK(std::abs(max_drift(p, period) - 1000.0) <= 1e-3);
    CHECK_THROWS_AS(wakeup_period(p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(wakeup_period(p, -2.0), std::invalid_argument);
}

TEST_CASE("fitted disturbance inverts the response") {
    DriftParams p = kDemo;
    p.disturbance = 0.0;
    const double d = fit_disturbance(p, 1.0, 0.2642411176571153);
    CHECK(d == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fit_disturbance(p, 1.0, 2.0 * 0.2642411176571153) ==
          doctest::Approx(2.0 * d).epsilon(1e-9));
    CHECK_THROWS_AS(fit_disturbance(p, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fit_disturbance(p, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("calibration loop keeps the period consistent") {
    // Stiffness-free drift: bias exactly cancelled, modest damping.
    DriftParams p{1.0, 0.5, 1.0, 1.0, 1.0, 0.0};
    REQUIRE(effective_stiffness(p) == doctest::Approx(0.0));
    const double d = fit_disturbance(p, 60.0, 2000.0);
    p.disturbance = d;
    CHECK(drift_response(p, 60.0) == doctest::Approx(2000.0).epsilon(1e-12));
    const double period = wakeup_period(p, 2000.0);
    CHECK(std::abs(period - 60.0) <= 1e-3);
}
