// Aircraft parameters, normalization basis and guidance limits shared by
// every other module.
//
// Normalization convention (all quantities dimensionless afterwards):
//   speed     / v_n
//   time      / (v_n / g)
//   distance  / (v_n^2 / g)
//   power     / (m g v_n)
//   rho_bar   = rho S v_n^2 / (2 m g)
// With this family the point-mass equations carry unit coefficients on the
// gravity terms (sin(gamma), cos(gamma)/V).
#pragma once

#include <numbers>

#include "windguide/state.hpp"

namespace windguide {

inline constexpr double kDegToRad = std::numbers::pi / 180.0;

enum class QuantityKind {
    speed,         // ft/s
    time,          // s
    distance,      // ft
    power,         // ft lbf / s
    angle,         // rad, unscaled
    gradient,      // (ft/s)/ft = 1/s
    acceleration,  // ft/s^2
    wavenumber,    // rad/ft
    rate,          // 1/s, e.g. a bank rate in rad/s
};

struct NormalizationBasis {
    double v_n = 134.5;        ///< characteristic speed [ft/s]
    double mass = 44.0 / 32.174;  ///< [slug]
    double gravity = 32.174;   ///< [ft/s^2]
    double wing_area = 10.76;  ///< [ft^2]

    void validate() const;

    double time_unit() const { return v_n / gravity; }
    double length_unit() const { return v_n * v_n / gravity; }

    /// Physical value of one normalized unit of the given kind.
    double scale(QuantityKind kind) const;
    double normalize(double value, QuantityKind kind) const;
    double denormalize(double value, QuantityKind kind) const;
};

/// ISA troposphere density [slug/ft^3] at a geometric altitude [ft].
double isa_density(double altitude_ft);

/// rho_bar = rho S v_n^2 / (2 m g).
double normalized_density(const NormalizationBasis& basis, double density);

struct AircraftParams {
    double cd0 = 0.03;
    double k_induced = 0.09;
    double rho_bar = 1.0;
    double cl_min = 0.0;
    double cl_max = 1.2;
    double cl_cruise = 0.5;
    double p_min = 0.0;
    double p_max = 1.0;
    double mu_max = 30.0 * kDegToRad;
    double p_rate_max = 6.216;
    double cl_rate_max = 1.865;
    double mu_rate_max = 1.085;
    double v_bar_min = 0.0;
    double v_bar_max = 0.0;

    /// Sets the airspeed bounds from the stall/cruise rule:
    /// v_min = 1/sqrt(rho_bar cl_max), v_max = 1.5/sqrt(rho_bar cl_cruise).
    void apply_speed_rule();
    void validate() const;

    /// Zero-wind level-flight power minimizer (K / (3 rho_bar^2 C_D0))^(1/4).
    double endurance_speed() const;
    /// Level-flight lift coefficient 1 / (rho_bar V^2).
    double level_lift(double v_bar) const;
};

/// ScanEagle-like defaults at the given altitude, speed bounds from the rule.
AircraftParams default_aircraft(const NormalizationBasis& basis, double altitude_ft = 15000.0);

struct GuidanceConfig {
    double dt_update = 4.0;                  ///< adjustment period [s]
    double dv_max = 5.0;                     ///< [ft/s]
    double dpsi_max = 30.0 * kDegToRad;      ///< [rad]
    double fd_step_v = 1e-4;                 ///< normalized speed
    double fd_step_psi = 1e-4;               ///< [rad]
    double levenberg_lambda0 = 1e-4;

    void validate(const NormalizationBasis& basis) const;
};

/// GuidanceConfig with every field in normalized units.
struct GuidanceBounds {
    double dt_bar;
    double dv_bar_max;
    double dpsi_max;
    double fd_step_v;
    double fd_step_psi;
    double lambda0;
};

GuidanceBounds normalize(const GuidanceConfig& config, const NormalizationBasis& basis);

/// Airspeed, heading, flight-path angle and position in physical units.
struct PhysicalState {
    double v = 0.0;      ///< [ft/s]
    double psi = 0.0;    ///< [rad]
    double gamma = 0.0;  ///< [rad]
    double x = 0.0;      ///< east [ft]
    double y = 0.0;      ///< north [ft]
    double h = 0.0;      ///< [ft]
};

State normalize_state(const PhysicalState& physical, const NormalizationBasis& basis);
PhysicalState denormalize_state(const State& state, const NormalizationBasis& basis);

}  // namespace windguide
