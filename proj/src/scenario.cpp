#include "windguide/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "parallel.hpp"
#include "windguide/error.hpp"

namespace windguide {

namespace detail {

namespace {
std::atomic<unsigned> g_threads{0};
}

unsigned sweep_threads() {
    const unsigned n = g_threads.load();
    if (n != 0) return n;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

void set_sweep_threads(unsigned count) { detail::g_threads.store(count); }

std::string_view to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::reference: return "reference";
        case ScenarioKind::adjusted: return "adjusted";
        case ScenarioKind::adjusted_airspeed_only: return "adjusted-airspeed-only";
    }
    return "unknown";
}

ScenarioKind parse_scenario_kind(std::string_view text) {
    if (text == "reference") return ScenarioKind::reference;
    if (text == "adjusted") return ScenarioKind::adjusted;
    if (text == "adjusted-airspeed-only") return ScenarioKind::adjusted_airspeed_only;
    fail(ErrorClass::invalid_argument, "unknown scenario kind '" + std::string(text) + "'");
}

namespace {

constexpr int kMaxHorizonHalvings = 8;

std::size_t whole_steps(double seconds, double rate, const char* what) {
    const double n = seconds * rate;
    const double rounded = std::round(n);
    require(rounded >= 1.0 && std::abs(n - rounded) < 1e-9 * std::max(1.0, n),
            ErrorClass::invalid_argument,
            std::string(what) + " must be a positive integer multiple of the simulation step");
    return static_cast<std::size_t>(rounded);
}

}  // namespace

void ScenarioSpec::validate() const {
    basis.validate();
    aircraft.validate();
    guidance.validate(basis);
    wind.validate();
    gains.validate();
    require(std::isfinite(flight_time) && flight_time > 0.0, ErrorClass::invalid_argument,
            "flight_time must be > 0");
    require(std::isfinite(sim_rate) && sim_rate > 0.0, ErrorClass::invalid_argument,
            "sim_rate must be > 0");
    require(std::isfinite(output_rate) && output_rate > 0.0 && output_rate <= sim_rate,
            ErrorClass::invalid_argument, "output_rate must be in (0, sim_rate]");
    whole_steps(guidance.dt_update, sim_rate, "guidance.dt_update");
    whole_steps(flight_time, sim_rate, "flight_time");
}

ScenarioSpec default_scenario() {
    ScenarioSpec spec;
    spec.aircraft = default_aircraft(spec.basis, spec.altitude_ft);
    spec.initial_state = State{.v_bar = spec.aircraft.endurance_speed()};
    return spec;
}

double trapezoid_average(const std::vector<double>& samples) {
    require(!samples.empty(), ErrorClass::invalid_argument, "no samples to average");
    if (samples.size() == 1) return samples.front();
    // Accumulate deviations from the first sample so a constant series comes
    // back bit-exact.
    const double base = samples.front();
    double sum = 0.5 * ((samples.front() - base) + (samples.back() - base));
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) sum += samples[i] - base;
    return base + sum / static_cast<double>(samples.size() - 1);
}

RunResult run(const ScenarioSpec& spec, bool keep_trajectory) {
    spec.validate();
    const NormalizationBasis& basis = spec.basis;
    const AircraftParams& params = spec.aircraft;
    const GuidanceBounds bounds = normalize(spec.guidance, basis);
    const WindField field = make_wind_field(spec.wind, basis);

    const std::size_t n_steps = whole_steps(spec.flight_time, spec.sim_rate, "flight_time");
    const std::size_t update_every = whole_steps(spec.guidance.dt_update, spec.sim_rate,
                                                 "guidance.dt_update");
    const std::size_t output_every =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(spec.sim_rate / spec.output_rate)));
    const double dt_s = 1.0 / spec.sim_rate;
    const double dt = basis.normalize(dt_s, QuantityKind::time);
    const double v_star = params.endurance_speed();

    State state = spec.initial_state;
    if (!(state.v_bar > 0.0)) state.v_bar = v_star;
    state.psi = wrap_two_pi(state.psi);

    VelocityCommand cmd{.v_bar_c = v_star, .psi_c = state.psi, .gamma_c = 0.0};
    Controls prev = trim_controls(state.v_bar, params);
    const AdjustmentMode mode = spec.kind == ScenarioKind::adjusted_airspeed_only
                                    ? AdjustmentMode::airspeed_only
                                    : AdjustmentMode::airspeed_and_heading;

    RunResult result;
    RunMetrics& m = result.metrics;
    std::vector<double> power;
    power.reserve(n_steps + 1);
    if (keep_trajectory) result.trajectory.reserve(n_steps / output_every + 2);

    const double tol = 1e-12;
    auto check_bounds = [&](const Controls& u, const Controls& before) {
        const double rp = std::abs(u.p_bar - before.p_bar) / dt;
        const double rc = std::abs(u.cl - before.cl) / dt;
        const double rm = std::abs(u.mu - before.mu) / dt;
        m.max_p_rate = std::max(m.max_p_rate, rp);
        m.max_cl_rate = std::max(m.max_cl_rate, rc);
        m.max_mu_rate = std::max(m.max_mu_rate, rm);
        const bool ok = rp <= params.p_rate_max * (1.0 + tol) &&
                        rc <= params.cl_rate_max * (1.0 + tol) &&
                        rm <= params.mu_rate_max * (1.0 + tol) && u.p_bar >= params.p_min &&
                        u.p_bar <= params.p_max && u.cl >= params.cl_min && u.cl <= params.cl_max &&
                        std::abs(u.mu) <= params.mu_max;
        m.bounds_respected = m.bounds_respected && ok;
    };

    std::size_t k = 0;
    auto controls_at = [&](double t) {
        const WindSample sample = field.advect(state, t);
        const WindRates wr = wind_rates(state, sample);
        Controls u = prev;
        try {
            u = track(state, cmd, wr, spec.gains, params, prev, dt);
        } catch (const Error& e) {
            if (e.error_class() != ErrorClass::singular_tracking) throw;
            ++m.singular_tracking_holds;
        }
        return std::make_tuple(u, sample, wr);
    };

    try {
        for (k = 0; k <= n_steps; ++k) {
            const double t = static_cast<double>(k) * dt;

            if (spec.kind != ScenarioKind::reference && k % update_every == 0 && k < n_steps) {
                ProjectedPowerInputs inputs{
                    .state = state,
                    .wind = field.sample(state.x_bar, state.y_bar, state.h_bar, t),
                    .dt_bar = bounds.dt_bar,
                };
                // A singular trapezoid system means the frozen-gradient
                // projection has no unique end point; shorten the horizon.
                Adjustment adj;
                for (int halvings = 0;; ++halvings) {
                    try {
                        adj = optimal_adjustment(inputs, bounds, params, mode);
                        break;
                    } catch (const Error& e) {
                        if (e.error_class() != ErrorClass::degenerate_horizon ||
                            halvings == kMaxHorizonHalvings)
                            throw;
                        inputs.dt_bar *= 0.5;
                        ++m.horizon_halvings;
                    }
                }
                ++m.adjustments;
                if (adj.status == AdjustmentStatus::accepted) ++m.adjustments_accepted;
                cmd.v_bar_c = state.v_bar + adj.d_v_bar;
                cmd.psi_c = wrap_two_pi(mode == AdjustmentMode::airspeed_only
                                            ? cmd.psi_c
                                            : state.psi + adj.d_psi);
            }

            const auto [u, sample, wr] = controls_at(t);
            check_bounds(u, prev);
            power.push_back(u.p_bar);

            if (keep_trajectory && (k % output_every == 0 || k == n_steps)) {
                result.trajectory.push_back(TrajectorySample{
                    .t = static_cast<double>(k) * dt_s,
                    .state = state,
                    .controls = u,
                    .command = cmd,
                    .wind = sample,
                    .wind_rates = wr,
                });
            }
            if (k == n_steps) break;
            state = step(state, u, field, t, dt, params);
            prev = u;
        }
    } catch (const Error& e) {
        fail(e.error_class(), "run aborted at step " + std::to_string(k) + ": " + e.what());
    }

    m.steps = n_steps;
    m.p_bar_avg = trapezoid_average(power);
    m.p_bar_heading_avg = m.p_bar_avg;
    return result;
}

HeadingSweepResult heading_sweep(const ScenarioSpec& spec, double d_psi0, double heading_offset) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    require(std::isfinite(d_psi0) && d_psi0 > 0.0, ErrorClass::invalid_argument,
            "heading increment must be > 0");
    const double count = two_pi / d_psi0;
    const double n_real = std::round(count);
    require(n_real >= 1.0 && std::abs(count * d_psi0 - n_real * d_psi0) <= 1e-9,
            ErrorClass::invalid_argument, "heading increment must divide 2 pi");
    const auto n = static_cast<std::size_t>(n_real);

    HeadingSweepResult out;
    out.headings.resize(n);
    out.p_bar_avg.resize(n);
    std::vector<RunMetrics> runs(n);
    detail::parallel_for(n, [&](std::size_t i) {
        ScenarioSpec s = spec;
        s.initial_state.psi = wrap_two_pi(heading_offset + static_cast<double>(i) * d_psi0);
        out.headings[i] = s.initial_state.psi;
        runs[i] = run(s, false).metrics;
        out.p_bar_avg[i] = runs[i].p_bar_avg;
    });

    double sum = 0.0;
    for (double p : out.p_bar_avg) sum += p;
    RunMetrics& m = out.metrics;
    m.p_bar_avg = sum / static_cast<double>(n);
    m.p_bar_heading_avg = m.p_bar_avg;
    for (const auto& r : runs) {
        m.max_p_rate = std::max(m.max_p_rate, r.max_p_rate);
        m.max_cl_rate = std::max(m.max_cl_rate, r.max_cl_rate);
        m.max_mu_rate = std::max(m.max_mu_rate, r.max_mu_rate);
        m.bounds_respected = m.bounds_respected && r.bounds_respected;
        m.steps += r.steps;
        m.adjustments += r.adjustments;
        m.adjustments_accepted += r.adjustments_accepted;
        m.singular_tracking_holds += r.singular_tracking_holds;
        m.horizon_halvings += r.horizon_halvings;
    }
    return out;
}

double benefit(double reference_avg, double candidate_avg) {
    require(std::isfinite(reference_avg) && reference_avg > 0.0, ErrorClass::invalid_argument,
            "reference average power must be > 0");
    return (reference_avg - candidate_avg) / reference_avg;
}

double benefit(const RunMetrics& reference, const RunMetrics& candidate) {
    return benefit(reference.p_bar_heading_avg, candidate.p_bar_heading_avg);
}

std::vector<FrequencyRow> frequency_sweep(const ScenarioSpec& spec, std::vector<double> omegas,
                                          const FrequencySweepOptions& options) {
    require(!omegas.empty(), ErrorClass::invalid_argument, "frequency list is empty");
    std::sort(omegas.begin(), omegas.end());

    std::vector<ScenarioKind> kinds{ScenarioKind::reference, ScenarioKind::adjusted};
    if (options.airspeed_only) kinds.push_back(ScenarioKind::adjusted_airspeed_only);

    std::vector<FrequencyRow> rows(omegas.size());
    for (std::size_t i = 0; i < omegas.size(); ++i) rows[i].omega_w = omegas[i];

    // One sweep per (frequency, strategy); heading_sweep parallelizes inside.
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        FrequencyRow& row = rows[i];
        try {
            for (ScenarioKind kind : kinds) {
                ScenarioSpec s = spec;
                s.kind = kind;
                s.wind.omega_w = omegas[i];
                const RunMetrics m = heading_sweep(s, options.d_psi0).metrics;
                const double p = m.p_bar_heading_avg;
                row.limits.max_p_rate = std::max(row.limits.max_p_rate, m.max_p_rate);
                row.limits.max_cl_rate = std::max(row.limits.max_cl_rate, m.max_cl_rate);
                row.limits.max_mu_rate = std::max(row.limits.max_mu_rate, m.max_mu_rate);
                row.limits.bounds_respected = row.limits.bounds_respected && m.bounds_respected;
                row.limits.steps += m.steps;
                switch (kind) {
                    case ScenarioKind::reference: row.p_reference = p; break;
                    case ScenarioKind::adjusted: row.p_adjusted = p; break;
                    case ScenarioKind::adjusted_airspeed_only: row.p_airspeed_only = p; break;
                }
            }
            if (row.p_adjusted) row.benefit = benefit(*row.p_reference, *row.p_adjusted);
            if (row.p_airspeed_only)
                row.benefit_airspeed_only = benefit(*row.p_reference, *row.p_airspeed_only);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    }
    return rows;
}

}  // namespace windguide
