// Normalized 3D point-mass equations of motion and their fixed-step
// integration.
#pragma once

#include "windguide/airframe.hpp"
#include "windguide/state.hpp"
#include "windguide/windfield.hpp"

namespace windguide {

struct Controls {
    double p_bar = 0.0;  ///< normalized power
    double cl = 0.0;     ///< lift coefficient
    double mu = 0.0;     ///< bank angle [rad]

    bool operator==(const Controls&) const = default;
};

/// d/dt_bar of every State field.
struct StateRates {
    double v_bar = 0.0;
    double psi = 0.0;
    double gamma = 0.0;
    double x_bar = 0.0;
    double y_bar = 0.0;
    double h_bar = 0.0;
};

/// Wind-rate projections onto the airspeed, heading and flight-path axes.
struct WindRates {
    double w_v_rate = 0.0;
    double w_psi_rate = 0.0;
    double w_gamma_rate = 0.0;
};

/// Projects the along-path component rates (sample.rate) of the wind.
WindRates wind_rates(const State& state, const WindSample& wind);

/// Right-hand side of the equations of motion. wind must carry along-path
/// rates (WindField::advect). Throws singular_state for v_bar <= 0 or
/// |gamma| >= pi/2.
StateRates state_derivative(const State& state, const Controls& controls, const WindSample& wind,
                            const AircraftParams& params);

/// Level-flight trim in zero wind: mu = 0, C_L = 1/(rho_bar V^2),
/// P = rho_bar V^3 (C_D0 + K C_L^2).
Controls trim_controls(double v_bar, const AircraftParams& params);

/// One classical RK4 step of length dt_bar from time t_bar with controls held
/// constant. The wind is re-sampled at every stage; heading is re-wrapped.
State step(const State& state, const Controls& controls, const WindField& wind, double t_bar,
           double dt_bar, const AircraftParams& params);

}  // namespace windguide
