#include <cmath>
#include <random>

#include "doctest.h"
#include "windguide/airframe.hpp"
#include "windguide/error.hpp"

using namespace windguide;

TEST_CASE("normalized airspeed of v_n is one") {
    NormalizationBasis basis;
    const State s = normalize_state(PhysicalState{.v = 134.5}, basis);
    CHECK(s.v_bar == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("zero physical state maps to zero") {
    const State s = normalize_state(PhysicalState{}, NormalizationBasis{});
    CHECK(s == State{});
}

TEST_CASE("one length unit is v_n squared over g") {
    NormalizationBasis basis;
    const double l = 134.5 * 134.5 / 32.174;
    const State s = normalize_state(PhysicalState{.x = l}, basis);
    CHECK(s.x_bar == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("denormalize scales back linearly") {
    NormalizationBasis basis;
    CHECK(denormalize_state(State{.v_bar = 1.0}, basis).v == doctest::Approx(134.5));
    CHECK(denormalize_state(State{.v_bar = 0.5}, basis).v == doctest::Approx(67.25));
}

TEST_CASE("round trip holds for every quantity kind") {
    NormalizationBasis basis{.v_n = 97.3, .mass = 2.1, .gravity = 32.174, .wing_area = 8.0};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (auto kind : {QuantityKind::speed, QuantityKind::time, QuantityKind::distance,
                      QuantityKind::power, QuantityKind::angle, QuantityKind::gradient,
                      QuantityKind::acceleration, QuantityKind::wavenumber, QuantityKind::rate}) {
        for (int i = 0; i < 200; ++i) {
            const double q = u(rng);
            const double back = basis.denormalize(basis.normalize(q, kind), kind);
            CHECK(std::abs(back - q) <= 1e-12 * std::abs(q));
        }
    }
    for (int i = 0; i < 100; ++i) {
        PhysicalState p{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        const PhysicalState b = denormalize_state(normalize_state(p, basis), basis);
        CHECK(std::abs(b.v - p.v) <= 1e-12 * std::abs(p.v));
        CHECK(std::abs(b.x - p.x) <= 1e-12 * std::abs(p.x));
        CHECK(std::abs(b.h - p.h) <= 1e-12 * std::abs(p.h));
        CHECK(b.psi == p.psi);
    }
}

TEST_CASE("non-finite and invalid inputs are rejected") {
    NormalizationBasis basis;
    CHECK_THROWS_AS(normalize_state(PhysicalState{.v = NAN}, basis), Error);
    CHECK_THROWS_AS(denormalize_state(State{.x_bar = INFINITY}, basis), Error);
    NormalizationBasis bad{.v_n = 0.0};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("normalized density uses rho S v_n^2 / (2 m g)") {
    NormalizationBasis basis;
    const double rho = isa_density(15000.0);
    CHECK(rho == doctest::Approx(0.0014962).epsilon(1e-3));
    const double expected = rho * 10.76 * 134.5 * 134.5 / (2.0 * 44.0);
    CHECK(normalized_density(basis, rho) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("default airframe has an ordered speed envelope") {
    const AircraftParams p = default_aircraft(NormalizationBasis{});
    CHECK(p.v_bar_min == doctest::Approx(1.0 / std::sqrt(p.rho_bar * p.cl_max)));
    CHECK(p.v_bar_max == doctest::Approx(1.5 / std::sqrt(p.rho_bar * p.cl_cruise)));
    CHECK(p.v_bar_min < p.v_bar_max);
    const double v_star = p.endurance_speed();
    CHECK(v_star > p.v_bar_min);
    CHECK(v_star < p.v_bar_max);
    CHECK(p.level_lift(v_star) <= p.cl_max);
}

TEST_CASE("inverted speed envelope is rejected") {
    AircraftParams p = default_aircraft(NormalizationBasis{});
    p.v_bar_min = p.v_bar_max + 0.1;
    CHECK_THROWS_AS(p.validate(), Error);
    p = default_aircraft(NormalizationBasis{});
    p.mu_rate_max = 0.0;
    CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("guidance config normalizes its limits") {
    NormalizationBasis basis;
    GuidanceConfig cfg;
    const GuidanceBounds b = normalize(cfg, basis);
    CHECK(b.dv_bar_max == doctest::Approx(5.0 / 134.5));
    CHECK(b.dt_bar == doctest::Approx(4.0 * 32.174 / 134.5));
    CHECK(b.dpsi_max == doctest::Approx(30.0 * kDegToRad));

    cfg.fd_step_v = 1.0;
    CHECK_THROWS_AS(cfg.validate(basis), Error);
    cfg = GuidanceConfig{};
    cfg.dt_update = 0.0;
    CHECK_THROWS_AS(cfg.validate(basis), Error);
}
