#include "windguide/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "windguide/error.hpp"

namespace windguide {

WindRates wind_rates(const State& s, const WindSample& w) {
    const double sg = std::sin(s.gamma), cg = std::cos(s.gamma);
    const double sp = std::sin(s.psi), cp = std::cos(s.psi);
    const double wx = w.rate[kX], wy = w.rate[kY], wh = w.rate[kH];
    return WindRates{
        .w_v_rate = wx * cg * sp + wy * cg * cp + wh * sg,
        .w_psi_rate = wx * cp - wy * sp,
        .w_gamma_rate = wx * sg * sp + wy * sg * cp - wh * cg,
    };
}

StateRates state_derivative(const State& s, const Controls& u, const WindSample& w,
                            const AircraftParams& p) {
    const double cg = std::cos(s.gamma);
    if (!(s.v_bar > 0.0) || !(std::abs(s.gamma) < std::numbers::pi / 2.0) || cg <= 0.0) {
        fail(ErrorClass::singular_state, "singular state: v_bar=" + std::to_string(s.v_bar) +
                                             " gamma=" + std::to_string(s.gamma));
    }
    const double v = s.v_bar;
    const double sg = std::sin(s.gamma);
    const double sp = std::sin(s.psi), cp = std::cos(s.psi);
    const WindRates wr = wind_rates(s, w);
    const double lift = p.rho_bar * v * u.cl;

    return StateRates{
        .v_bar = u.p_bar / v - p.rho_bar * v * v * (p.cd0 + p.k_induced * u.cl * u.cl) - sg -
                 wr.w_v_rate,
        .psi = lift / cg * std::sin(u.mu) - wr.w_psi_rate / (v * cg),
        .gamma = lift * std::cos(u.mu) - cg / v + wr.w_gamma_rate / v,
        .x_bar = v * cg * sp + w.components[kX],
        .y_bar = v * cg * cp + w.components[kY],
        .h_bar = v * sg + w.components[kH],
    };
}

Controls trim_controls(double v_bar, const AircraftParams& p) {
    require(v_bar > 0.0, ErrorClass::singular_state, "trim requires v_bar > 0");
    const double cl = p.level_lift(v_bar);
    return Controls{
        .p_bar = p.rho_bar * v_bar * v_bar * v_bar * (p.cd0 + p.k_induced * cl * cl),
        .cl = cl,
        .mu = 0.0,
    };
}

namespace {

State advance(const State& s, const StateRates& r, double h) {
    return State{
        .v_bar = s.v_bar + h * r.v_bar,
        .psi = s.psi + h * r.psi,
        .gamma = s.gamma + h * r.gamma,
        .x_bar = s.x_bar + h * r.x_bar,
        .y_bar = s.y_bar + h * r.y_bar,
        .h_bar = s.h_bar + h * r.h_bar,
    };
}

}  // namespace

State step(const State& s, const Controls& u, const WindField& wind, double t, double dt,
           const AircraftParams& p) {
    require(dt > 0.0, ErrorClass::invalid_argument, "dt_bar must be > 0");
    auto rhs = [&](const State& x, double time) {
        return state_derivative(x, u, wind.advect(x, time), p);
    };
    const StateRates k1 = rhs(s, t);
    const StateRates k2 = rhs(advance(s, k1, 0.5 * dt), t + 0.5 * dt);
    const StateRates k3 = rhs(advance(s, k2, 0.5 * dt), t + 0.5 * dt);
    const StateRates k4 = rhs(advance(s, k3, dt), t + dt);

    const double w = dt / 6.0;
    State out{
        .v_bar = s.v_bar + w * (k1.v_bar + 2.0 * k2.v_bar + 2.0 * k3.v_bar + k4.v_bar),
        .psi = s.psi + w * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi),
        .gamma = s.gamma + w * (k1.gamma + 2.0 * k2.gamma + 2.0 * k3.gamma + k4.gamma),
        .x_bar = s.x_bar + w * (k1.x_bar + 2.0 * k2.x_bar + 2.0 * k3.x_bar + k4.x_bar),
        .y_bar = s.y_bar + w * (k1.y_bar + 2.0 * k2.y_bar + 2.0 * k3.y_bar + k4.y_bar),
        .h_bar = s.h_bar + w * (k1.h_bar + 2.0 * k2.h_bar + 2.0 * k3.h_bar + k4.h_bar),
    };
    out.psi = wrap_two_pi(out.psi);
    return out;
}

}  // namespace windguide
