// Projected-power objective built from a single in-situ wind sample and the
// single-shot second-order adjustment of airspeed and heading commands.
//
// Over the update horizon dt the wind gradients and time partials are frozen
// at their measured values. Positions at the horizon end follow from the
// trapezoidal rule applied to the level-flight kinematics, which gives a 2x2
// linear system in (dx, dy) with determinant Q_level.
#pragma once

#include <array>
#include <string_view>

#include "windguide/airframe.hpp"
#include "windguide/state.hpp"
#include "windguide/windfield.hpp"

namespace windguide {

struct ProjectedPowerInputs {
    State state;      ///< at t0
    WindSample wind;  ///< at t0: components, gradients, time partials
    double dt_bar;    ///< projection horizon
};

struct PositionIncrement {
    double dx_bar;
    double dy_bar;
};

struct ProjectedPower {
    double value;
    /// False when V0 + dV is outside [v_bar_min, v_bar_max]; the solver then
    /// treats the point as +inf.
    bool feasible;

    double effective() const;
};

enum class AdjustmentMode {
    airspeed_and_heading,
    airspeed_only,  ///< heading step forced to zero, 1D solve in airspeed
};

enum class AdjustmentStatus {
    accepted,
    no_improvement,            ///< candidate rejected, zero step returned
    regularization_exhausted,  ///< lambda exceeded its cap, zero step
    non_finite,                ///< non-finite objective in the stencil, zero step
};

std::string_view to_string(AdjustmentStatus status);

struct Adjustment {
    double d_v_bar = 0.0;
    double d_psi = 0.0;
    double d_gamma = 0.0;  ///< always 0 in level mode
    Vec3 gradient{};       ///< T1, gamma entry unused
    Mat3 hessian{};        ///< T2, gamma row/column unused
    double lambda_used = 0.0;
    std::array<bool, 2> clamped{false, false};  ///< (airspeed, heading)
    AdjustmentStatus status = AdjustmentStatus::accepted;
    double predicted_power = 0.0;  ///< objective at the returned step
    double baseline_power = 0.0;   ///< objective at zero step
};

/// Level-flight power with trim lift: rho V^3 C_D0 + K/(rho V) + V W_V'.
double steady_level_power(double v_bar, double w_v_rate, const AircraftParams& params);

/// Determinant of the trapezoidal position system:
/// (2/dt)^2 - (2/dt)(dWx/dx + dWy/dy) + (dWx/dx dWy/dy - dWx/dy dWy/dx).
double q_level(const ProjectedPowerInputs& inputs);

/// Throws degenerate_horizon when |Q_level| < 1e-9 and invalid_argument for a
/// nonpositive horizon.
void check_horizon(const ProjectedPowerInputs& inputs);

PositionIncrement position_increment(const ProjectedPowerInputs& inputs, double d_v,
                                     double d_psi);

/// Along-heading wind rate at the horizon end, evaluated at the commanded
/// airspeed and heading with winds extrapolated by the frozen gradients.
double projected_wind_rate(const ProjectedPowerInputs& inputs, double d_v, double d_psi);

ProjectedPower projected_power(const ProjectedPowerInputs& inputs, double d_v, double d_psi,
                               const AircraftParams& params);

/// Box of admissible (dV, dPsi): the guidance bounds intersected with the
/// airspeed envelope around V0.
struct AdmissibleBox {
    double dv_lo, dv_hi, dpsi_lo, dpsi_hi;
};

AdmissibleBox admissible_box(const State& state, const GuidanceBounds& bounds,
                             const AircraftParams& params);

/// Single-shot second-order adjustment. T1 and T2 come from central finite
/// differences at zero step; the step solves (T2^T T2 + lambda I) d = -T2^T T1
/// with lambda = 0 unless T2 has an eigenvalue below 1e-8. The step is then
/// clamped into the admissible box and kept only if it does not increase the
/// projected power.
Adjustment optimal_adjustment(const ProjectedPowerInputs& inputs, const GuidanceBounds& bounds,
                              const AircraftParams& params,
                              AdjustmentMode mode = AdjustmentMode::airspeed_and_heading);

}  // namespace windguide
