#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "windguide/dynamics.hpp"
#include "windguide/error.hpp"
#include "windguide/tracking.hpp"

using namespace windguide;

namespace {

const NormalizationBasis kBasis;
const AircraftParams kParams = default_aircraft(kBasis);
const double kDt = kBasis.normalize(0.02, QuantityKind::time);

struct Closed {
    State state;
    Controls prev;
};

// Zero-wind closed loop, saturated, one 50 Hz step.
void advance(Closed& c, const VelocityCommand& cmd, const TrackingGains& k, double t) {
    const Controls u = track(c.state, cmd, WindRates{}, k, kParams, c.prev, kDt);
    c.state = step(c.state, u, WindField{}, t, kDt, kParams);
    c.prev = u;
}

}  // namespace

TEST_CASE("zero error in calm air recovers trim") {
    const double v = 0.6;
    const Controls u = control_commands(State{.v_bar = v, .psi = 1.0},
                                        VelocityCommand{v, 1.0, 0.0}, WindRates{}, TrackingGains{}, kParams);
    const Controls trim = trim_controls(v, kParams);
    CHECK(u.mu == 0.0);
    CHECK(u.cl == doctest::Approx(trim.cl).epsilon(1e-14));
    CHECK(u.p_bar == doctest::Approx(trim.p_bar).epsilon(1e-14));
    const StateRates r = state_derivative(State{.v_bar = v, .psi = 1.0}, u, WindSample{}, kParams);
    CHECK(std::abs(r.v_bar) < 1e-15);
    CHECK(std::abs(r.psi) < 1e-15);
    CHECK(std::abs(r.gamma) < 1e-15);
}

TEST_CASE("positive heading error banks toward the command") {
    const TrackingGains k;
    const double v = 0.6, delta = 0.05;
    const Controls u = control_commands(State{.v_bar = v, .psi = 1.0 + delta},
                                        VelocityCommand{v, 1.0, 0.0}, WindRates{}, k, kParams);
    CHECK(std::tan(u.mu) == doctest::Approx(-v * k.k_psi * delta));
    CHECK(u.mu < 0.0);
}

TEST_CASE("heading error is taken the short way around") {
    const Controls u = control_commands(State{.v_bar = 0.6, .psi = 0.05},
                                        VelocityCommand{0.6, 2 * std::numbers::pi - 0.05, 0.0},
                                        WindRates{}, TrackingGains{}, kParams);
    CHECK(u.mu < 0.0);
    CHECK(std::abs(std::tan(u.mu)) < 0.6 * TrackingGains{}.k_psi * 0.11);
}

TEST_CASE("unsaturated closed loop decays each error at its gain") {
    const TrackingGains k{.k_v = 1.5, .k_psi = 0.7, .k_gamma = 2.0};
    const State s{.v_bar = 0.6, .psi = 1.0, .gamma = 0.01};
    const VelocityCommand cmd{0.62, 1.02, 0.0};
    const Controls u = control_commands(s, cmd, WindRates{}, k, kParams);
    const StateRates r = state_derivative(s, u, WindSample{}, kParams);
    CHECK(r.v_bar == doctest::Approx(-k.k_v * (s.v_bar - cmd.v_bar_c)).epsilon(1e-12));
    CHECK(r.psi == doctest::Approx(-k.k_psi * (s.psi - cmd.psi_c)).epsilon(1e-12));
    CHECK(r.gamma == doctest::Approx(-k.k_gamma * (s.gamma - cmd.gamma_c)).epsilon(1e-12));
}

TEST_CASE("push-over demand lowers lift instead of raising it") {
    const State s{.v_bar = 0.6, .gamma = 0.5};
    const Controls u = control_commands(s, VelocityCommand{0.6, 0.0, 0.0}, WindRates{},
                                        TrackingGains{}, kParams);
    CHECK(u.cl < kParams.level_lift(0.6));
}

TEST_CASE("vanishing bank-law denominator is a tracking singularity") {
    const TrackingGains k{.k_v = 1.0, .k_psi = 1.0, .k_gamma = 1.0};
    const double v = 0.6;
    // cos(gamma) = v k_gamma (gamma - gamma_c) with gamma_c = 0.
    double g = 1.0;
    for (int i = 0; i < 60; ++i) g -= (std::cos(g) - v * g) / (-std::sin(g) - v);
    try {
        control_commands(State{.v_bar = v, .gamma = g}, VelocityCommand{v, 0.0, 0.0}, WindRates{}, k,
                         kParams);
        FAIL("expected singular_tracking");
    } catch (const Error& e) {
        CHECK(e.error_class() == ErrorClass::singular_tracking);
    }
}

TEST_CASE("interior controls pass through saturation") {
    const Controls prev{0.07, 0.9, 0.0};
    const Controls u{0.071, 0.905, 0.004};
    CHECK(saturate(u, prev, kParams, kDt) == u);
}

TEST_CASE("power jump is rate limited") {
    const Controls prev{0.0, 0.9, 0.0};
    const Controls u{10.0, 0.9, 0.0};
    const Controls s = saturate(u, prev, kParams, kDt);
    CHECK(s.p_bar == doctest::Approx(6.216 * kDt).epsilon(1e-15));
}

TEST_CASE("bank beyond its bound is clipped to the bound") {
    const Controls prev{0.07, 0.9, kParams.mu_max};
    const Controls s = saturate(Controls{0.07, 0.9, 1.2}, prev, kParams, kDt);
    CHECK(s.mu == kParams.mu_max);
}

TEST_CASE("track equals the plain law when the bank is not limited") {
    const State s{.v_bar = 0.56, .psi = 0.3};
    const VelocityCommand cmd{0.565, 0.303, 0.0};
    const Controls prev = trim_controls(0.56, kParams);
    const Controls plain = saturate(control_commands(s, cmd, WindRates{}, TrackingGains{}, kParams),
                                    prev, kParams, kDt);
    CHECK(track(s, cmd, WindRates{}, TrackingGains{}, kParams, prev, kDt) == plain);
}

TEST_CASE("track keeps vertical balance at the bank limit") {
    const double v = 0.6;
    const State s{.v_bar = v, .psi = 0.0};
    Controls prev = trim_controls(v, kParams);
    prev.mu = kParams.mu_max;
    prev.cl = 1.0 / (kParams.rho_bar * v * v * std::cos(prev.mu));
    const Controls u = track(s, VelocityCommand{v, 2.0, 0.0}, WindRates{}, TrackingGains{}, kParams,
                             prev, kDt);
    CHECK(u.mu == kParams.mu_max);
    CHECK(kParams.rho_bar * v * u.cl * std::cos(u.mu) == doctest::Approx(1.0 / v).epsilon(1e-12));
}

TEST_CASE("saturation never enlarges a step and is idempotent") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 2000; ++i) {
        const Controls prev = saturate(Controls{u(rng), u(rng), u(rng)},
                                       Controls{0.5, 0.6, 0.0}, kParams, 10.0);
        const Controls raw{u(rng), u(rng), u(rng)};
        const Controls s = saturate(raw, prev, kParams, kDt);
        CHECK(std::abs(s.p_bar - prev.p_bar) <= std::abs(raw.p_bar - prev.p_bar));
        CHECK(std::abs(s.cl - prev.cl) <= std::abs(raw.cl - prev.cl));
        CHECK(std::abs(s.mu - prev.mu) <= std::abs(raw.mu - prev.mu));
        CHECK(saturate(s, prev, kParams, kDt) == s);
    }
}

TEST_CASE("closed loop converges without divergence in calm air") {
    const TrackingGains k;
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double v_star = kParams.endurance_speed();
    for (int trial = 0; trial < 8; ++trial) {
        const VelocityCommand cmd{
            kParams.v_bar_min + 0.05 + (kParams.v_bar_max - kParams.v_bar_min - 0.1) * u(rng),
            2 * std::numbers::pi * u(rng), 0.0};
        Closed c{State{.v_bar = v_star, .psi = 2 * std::numbers::pi * u(rng)}, trim_controls(v_star, kParams)};
        auto error = [&] {
            return std::abs(c.state.v_bar - cmd.v_bar_c) + std::abs(wrap_pi(c.state.psi - cmd.psi_c)) +
                   std::abs(c.state.gamma);
        };
        // Envelope: the largest error over each 5 s window must not grow.
        double previous_peak = error() + 1e-9;
        for (int w = 0; w < 12; ++w) {
            double peak = 0.0;
            for (int i = 0; i < 250; ++i) {
                advance(c, cmd, k, 0.0);
                peak = std::max(peak, error());
            }
            CHECK(peak <= previous_peak * (1.0 + 1e-6) + 1e-9);
            previous_peak = peak;
        }
        CHECK(error() < 1e-4);
    }
}

TEST_CASE("airspeed step settles inside one update period") {
    const TrackingGains k;
    const double v_star = kParams.endurance_speed();
    const double target = v_star + kBasis.normalize(5.0, QuantityKind::speed);
    Closed c{State{.v_bar = v_star}, trim_controls(v_star, kParams)};
    const VelocityCommand cmd{target, 0.0, 0.0};
    double settled_at = -1.0;
    for (int i = 1; i <= 200; ++i) {
        advance(c, cmd, k, 0.0);
        const bool in_band = std::abs(c.state.v_bar - target) <= 0.02 * (target - v_star);
        if (in_band && settled_at < 0.0) settled_at = i * 0.02;
        if (!in_band) settled_at = -1.0;
    }
    CHECK(settled_at > 0.0);
    CHECK(settled_at <= 4.0);
}
