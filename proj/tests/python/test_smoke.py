import math

import pytest

import windguide as wg


@pytest.fixture(scope="module")
def params():
    return wg.default_aircraft()


def test_normalization_round_trip():
    basis = wg.NormalizationBasis()
    assert basis.time_unit() == pytest.approx(134.5 / 32.174)
    v = basis.normalize(134.5, wg.QuantityKind.speed)
    assert v == pytest.approx(1.0)
    assert basis.denormalize(v, wg.QuantityKind.speed) == pytest.approx(134.5)


def test_default_aircraft_envelope(params):
    v_star = params.endurance_speed()
    assert params.v_bar_min < v_star < params.v_bar_max
    assert params.rho_bar == pytest.approx(3.31, abs=0.01)


def test_trim_step_holds_state(params):
    v_star = params.endurance_speed()
    s = wg.State(v_bar=v_star, psi=0.3)
    u = wg.trim_controls(v_star, params)
    calm = wg.WindField.uniform(0.0, 0.0)
    nxt = wg.step(s, u, calm, 0.0, 0.01, params)
    assert nxt.v_bar == pytest.approx(v_star, abs=1e-10)
    assert nxt.psi == pytest.approx(0.3, abs=1e-10)
    assert nxt.x_bar == pytest.approx(v_star * math.sin(0.3) * 0.01, rel=1e-9)


def test_wind_sample_shapes():
    field = wg.make_wind_field(wg.WindFieldParams())
    w = field.sample(0.1, 0.2)
    assert len(w.components) == 3
    assert len(w.gradient) == 3 and all(len(row) == 3 for row in w.gradient)


def test_guidance_calm_air_has_no_step(params):
    basis = wg.NormalizationBasis()
    bounds = wg.normalize_guidance(wg.GuidanceConfig(), basis)
    s = wg.State(v_bar=params.endurance_speed())
    inputs = wg.ProjectedPowerInputs(s, wg.WindSample(), bounds.dt_bar)
    adj = wg.optimal_adjustment(inputs, bounds, params)
    assert abs(adj.d_v_bar) < 1e-6 and abs(adj.d_psi) < 1e-6
    p = wg.projected_power(inputs, 0.0, 0.0, params)
    assert p.feasible
    assert p.value == pytest.approx(wg.steady_level_power(s.v_bar, 0.0, params), rel=1e-9)


def test_track_within_limits(params):
    s = wg.State(v_bar=params.endurance_speed())
    prev = wg.trim_controls(s.v_bar, params)
    cmd = wg.VelocityCommand(s.v_bar, math.radians(60.0))
    u = wg.track(s, cmd, wg.WindRates(), wg.TrackingGains(), params, prev, 0.01)
    assert abs(u.mu) <= params.mu_max + 1e-12
    assert params.cl_min <= u.cl <= params.cl_max


def test_short_run_and_benefit():
    spec = wg.default_scenario()
    spec.flight_time = 20.0
    ref = wg.default_scenario()
    ref.flight_time = 20.0
    ref.kind = wg.ScenarioKind.reference
    a = wg.run(spec)
    r = wg.run(ref, keep_trajectory=False)
    assert len(a.trajectory) == 21
    assert r.trajectory == []
    assert a.metrics.bounds_respected
    b = wg.benefit(r.metrics.p_bar_avg, a.metrics.p_bar_avg)
    assert math.isfinite(b)


def test_frequency_sweep_rows():
    spec = wg.default_scenario()
    spec.flight_time = 8.0
    rows = wg.frequency_sweep(spec, [0.01, 0.05], d_psi0=math.pi / 2, airspeed_only=False)
    assert [r.omega_w for r in rows] == [0.01, 0.05]
    assert all(r.benefit is not None for r in rows)


def test_errors_carry_class():
    spec = wg.default_scenario()
    spec.flight_time = -1.0
    with pytest.raises(wg.WindguideError) as info:
        wg.run(spec)
    assert info.value.error_class == "invalid_argument"
