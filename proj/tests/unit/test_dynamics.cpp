#include <chrono>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "windguide/dynamics.hpp"
#include "windguide/error.hpp"

using namespace windguide;

namespace {

const NormalizationBasis kBasis;

WindSample with_rates(double wx, double wy, double wh) {
    WindSample s;
    s.rate = {wx, wy, wh};
    return s;
}

}  // namespace

TEST_CASE("wind rates project the component rates") {
    const State level_north{.v_bar = 0.5};
    const WindRates zero = wind_rates(level_north, with_rates(0, 0, 0));
    CHECK(zero.w_v_rate == 0.0);
    CHECK(zero.w_psi_rate == 0.0);
    CHECK(zero.w_gamma_rate == 0.0);

    const WindRates east = wind_rates(State{.v_bar = 0.5, .psi = std::numbers::pi / 2}, with_rates(0.3, 0, 0));
    CHECK(east.w_v_rate == doctest::Approx(0.3));
    CHECK(std::abs(east.w_psi_rate) < 1e-16);
    CHECK(east.w_gamma_rate == 0.0);

    // Along-track change heading north: no cross-track component.
    const WindRates north = wind_rates(level_north, with_rates(0, 0.2, 0));
    CHECK(north.w_v_rate == doctest::Approx(0.2));
    CHECK(north.w_psi_rate == 0.0);
    CHECK(north.w_gamma_rate == 0.0);
    // Cross-track change heading north turns the wind rate into W_psi'.
    const WindRates cross = wind_rates(level_north, with_rates(0.2, 0, 0));
    CHECK(cross.w_v_rate == 0.0);
    CHECK(cross.w_psi_rate == doctest::Approx(0.2));
}

TEST_CASE("wind rates are linear in the component rates") {
    const State s{.v_bar = 0.7, .psi = 2.1, .gamma = 0.2};
    const WindRates a = wind_rates(s, with_rates(0.1, -0.3, 0.05));
    const WindRates b = wind_rates(s, with_rates(-0.4, 0.2, 0.3));
    const WindRates ab = wind_rates(s, with_rates(-0.3, -0.1, 0.35));
    CHECK(ab.w_v_rate == doctest::Approx(a.w_v_rate + b.w_v_rate).epsilon(1e-14));
    CHECK(ab.w_psi_rate == doctest::Approx(a.w_psi_rate + b.w_psi_rate).epsilon(1e-14));
    CHECK(ab.w_gamma_rate == doctest::Approx(a.w_gamma_rate + b.w_gamma_rate).epsilon(1e-14));
}

TEST_CASE("level trim is an equilibrium") {
    const AircraftParams p = default_aircraft(kBasis);
    for (double v : {p.v_bar_min, p.endurance_speed(), 0.8, p.v_bar_max}) {
        const Controls u = trim_controls(v, p);
        const StateRates r = state_derivative(State{.v_bar = v, .psi = 0.4}, u, WindSample{}, p);
        CHECK(std::abs(r.v_bar) < 1e-15);
        CHECK(std::abs(r.psi) < 1e-15);
        CHECK(std::abs(r.gamma) < 1e-15);
    }
}

TEST_CASE("kinematics of level flight") {
    const AircraftParams p = default_aircraft(kBasis);
    const StateRates r = state_derivative(State{.v_bar = 1.0, .psi = std::numbers::pi / 2},
                                          trim_controls(1.0, p), WindSample{}, p);
    CHECK(r.x_bar == doctest::Approx(1.0));
    CHECK(std::abs(r.y_bar) < 1e-15);
    CHECK(r.h_bar == 0.0);
}

TEST_CASE("an along-path wind rate decelerates a trimmed aircraft one for one") {
    const AircraftParams p = default_aircraft(kBasis);
    const double v = p.endurance_speed();
    WindSample w;
    w.rate = {0.0, 0.017, 0.0};  // heading north, so W_V' = W_y'
    const StateRates r = state_derivative(State{.v_bar = v}, trim_controls(v, p), w, p);
    CHECK(r.v_bar == doctest::Approx(-0.017).epsilon(1e-12));
}

TEST_CASE("singular states are rejected") {
    const AircraftParams p = default_aircraft(kBasis);
    const Controls u = trim_controls(0.6, p);
    CHECK_THROWS_AS(state_derivative(State{.v_bar = 0.0}, u, WindSample{}, p), Error);
    CHECK_THROWS_AS(state_derivative(State{.v_bar = 0.6, .gamma = std::numbers::pi / 2}, u, WindSample{}, p),
                    Error);
    try {
        state_derivative(State{.v_bar = -1.0}, u, WindSample{}, p);
    } catch (const Error& e) {
        CHECK(e.error_class() == ErrorClass::singular_state);
    }
}

TEST_CASE("trimmed step holds the dynamic states and advances position") {
    const AircraftParams p = default_aircraft(kBasis);
    const double v = p.endurance_speed();
    const double dt = kBasis.normalize(0.02, QuantityKind::time);
    const State s0{.v_bar = v, .psi = 0.9};
    const State s1 = step(s0, trim_controls(v, p), WindField{}, 0.0, dt, p);
    CHECK(std::abs(s1.v_bar - v) <= 1e-10);
    CHECK(std::abs(s1.psi - 0.9) <= 1e-10);
    CHECK(std::abs(s1.gamma) <= 1e-10);
    CHECK(s1.x_bar == doctest::Approx(v * dt * std::sin(0.9)).epsilon(1e-12));
    CHECK(s1.y_bar == doctest::Approx(v * dt * std::cos(0.9)).epsilon(1e-12));
}

TEST_CASE("constant wind adds to the ground track") {
    const AircraftParams p = default_aircraft(kBasis);
    const double v = p.endurance_speed();
    const double dt = 0.01;
    const State s0{.v_bar = v, .psi = 0.3};
    const State s1 = step(s0, trim_controls(v, p), WindField::uniform(0.05, 0.0), 0.0, dt, p);
    CHECK(s1.x_bar == doctest::Approx((v * std::sin(0.3) + 0.05) * dt).epsilon(1e-12));
}

TEST_CASE("heading is wrapped into [0, 2 pi)") {
    const AircraftParams p = default_aircraft(kBasis);
    const double v = p.endurance_speed();
    Controls u = trim_controls(v, p);
    u.mu = 0.3;
    u.cl = u.cl / std::cos(u.mu);
    State s{.v_bar = v, .psi = 2.0 * std::numbers::pi - 1e-4};
    s = step(s, u, WindField{}, 0.0, 0.01, p);
    CHECK(s.psi >= 0.0);
    CHECK(s.psi < 0.01);
}

TEST_CASE("1200 s trimmed flight drifts less than 1e-6 in airspeed") {
    const AircraftParams p = default_aircraft(kBasis);
    const double v = p.endurance_speed();
    const Controls u = trim_controls(v, p);
    const double dt = kBasis.normalize(0.02, QuantityKind::time);
    State s{.v_bar = v};
    const auto start = std::chrono::steady_clock::now();
    for (int k = 0; k < 60'000; ++k) s = step(s, u, WindField{}, k * dt, dt, p);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(std::abs(s.v_bar - v) < 1e-6);
    CHECK(seconds < 5.0);
}

TEST_CASE("RK4 converges at fourth order on a smooth field") {
    const AircraftParams p = default_aircraft(kBasis);
    WindFieldParams wp;
    wp.w_m = 10.0;
    wp.psi_w = 0.6;
    wp.omega_w = 0.01;
    const WindField f = make_sinusoidal(wp, kBasis);
    const double v = p.endurance_speed();
    Controls u = trim_controls(v, p);
    u.mu = 0.2;
    u.p_bar *= 1.3;
    const State s0{.v_bar = v, .psi = 0.4};
    const double horizon = 0.4;

    auto integrate = [&](int n) {
        State s = s0;
        const double h = horizon / n;
        for (int k = 0; k < n; ++k) s = step(s, u, f, k * h, h, p);
        return s;
    };
    auto error = [](const State& a, const State& b) {
        return std::abs(a.v_bar - b.v_bar) + std::abs(wrap_pi(a.psi - b.psi)) +
               std::abs(a.gamma - b.gamma) + std::abs(a.x_bar - b.x_bar) + std::abs(a.y_bar - b.y_bar);
    };
    const State ref = integrate(64);
    const double e1 = error(integrate(2), ref);
    const double e2 = error(integrate(4), ref);
    const double order = std::log2(e1 / e2);
    CHECK(order >= 3.8);
}
