// Feedback-linearization autopilot for velocity commands.
//
// With the laws below the closed loop obeys
//   V'     = -k_v   (V - V_c)
//   psi'   = -k_psi (psi - psi_c)
//   gamma' = -k_gamma (gamma - gamma_c)
// as long as no control saturates.
#pragma once

#include "windguide/airframe.hpp"
#include "windguide/dynamics.hpp"
#include "windguide/state.hpp"

namespace windguide {

struct VelocityCommand {
    double v_bar_c = 0.0;
    double psi_c = 0.0;
    double gamma_c = 0.0;
};

struct TrackingGains {
    double k_v = 5.0;
    double k_psi = 2.0;
    double k_gamma = 5.0;

    void validate() const;
};

/// Unsaturated controls. The heading error is wrapped to (-pi, pi]. Throws
/// singular_tracking when the bank-law denominator is below 1e-9 in magnitude.
Controls control_commands(const State& state, const VelocityCommand& cmd,
                          const WindRates& wind_rates, const TrackingGains& gains,
                          const AircraftParams& params);

/// Magnitude bounds first, then the per-step rate bounds around previous.
Controls saturate(const Controls& controls, const Controls& previous,
                  const AircraftParams& params, double dt_bar);

/// One autopilot step: the bank angle is limited first, then C_L is re-solved
/// so the vertical channel still follows its law at the bank actually flown,
/// and power is formed from that C_L; the result is saturated. Identical to
/// saturate(control_commands(...)) whenever the bank is not limited.
Controls track(const State& state, const VelocityCommand& cmd, const WindRates& wind_rates,
               const TrackingGains& gains, const AircraftParams& params, const Controls& previous,
               double dt_bar);

}  // namespace windguide
