#include "windguide/airframe.hpp"

#include <cmath>
#include <string>

#include "windguide/error.hpp"

namespace windguide {

namespace {

void require_positive(double value, const char* name) {
    require(std::isfinite(value) && value > 0.0, ErrorClass::invalid_argument,
            std::string(name) + " must be finite and > 0 (got " + std::to_string(value) + ")");
}

void require_finite(double value, const char* name) {
    require(std::isfinite(value), ErrorClass::invalid_argument,
            std::string("non-finite ") + name);
}

}  // namespace

void NormalizationBasis::validate() const {
    require_positive(v_n, "v_n");
    require_positive(mass, "mass");
    require_positive(gravity, "gravity");
    require_positive(wing_area, "wing_area");
}

double NormalizationBasis::scale(QuantityKind kind) const {
    switch (kind) {
        case QuantityKind::speed: return v_n;
        case QuantityKind::time: return time_unit();
        case QuantityKind::distance: return length_unit();
        case QuantityKind::power: return mass * gravity * v_n;
        case QuantityKind::angle: return 1.0;
        case QuantityKind::gradient: return gravity / v_n;
        case QuantityKind::acceleration: return gravity;
        case QuantityKind::wavenumber: return gravity / (v_n * v_n);
        case QuantityKind::rate: return gravity / v_n;
    }
    return 1.0;
}

double NormalizationBasis::normalize(double value, QuantityKind kind) const {
    require_finite(value, "quantity");
    return value / scale(kind);
}

double NormalizationBasis::denormalize(double value, QuantityKind kind) const {
    require_finite(value, "quantity");
    return value * scale(kind);
}

double isa_density(double altitude_ft) {
    constexpr double rho_sl = 0.0023769;  // slug/ft^3
    return rho_sl * std::pow(1.0 - 6.8756e-6 * altitude_ft, 4.2561);
}

double normalized_density(const NormalizationBasis& basis, double density) {
    basis.validate();
    require_positive(density, "density");
    return density * basis.wing_area * basis.v_n * basis.v_n /
           (2.0 * basis.mass * basis.gravity);
}

void AircraftParams::apply_speed_rule() {
    v_bar_min = 1.0 / std::sqrt(rho_bar * cl_max);
    v_bar_max = 1.5 / std::sqrt(rho_bar * cl_cruise);
}

void AircraftParams::validate() const {
    require_positive(cd0, "cd0");
    require_positive(k_induced, "k_induced");
    require_positive(rho_bar, "rho_bar");
    require_positive(cl_max, "cl_max");
    require_positive(cl_cruise, "cl_cruise");
    require_positive(mu_max, "mu_max");
    require_positive(p_rate_max, "p_rate_max");
    require_positive(cl_rate_max, "cl_rate_max");
    require_positive(mu_rate_max, "mu_rate_max");
    require_positive(v_bar_min, "v_bar_min");
    require_finite(cl_min, "cl_min");
    require_finite(p_min, "p_min");
    require_finite(p_max, "p_max");
    require(cl_min < cl_max, ErrorClass::invalid_argument, "cl_min must be < cl_max");
    require(p_min < p_max, ErrorClass::invalid_argument, "p_min must be < p_max");
    require(std::isfinite(v_bar_max) && v_bar_min < v_bar_max, ErrorClass::invalid_argument,
            "v_bar_min must be < v_bar_max");
}

double AircraftParams::endurance_speed() const {
    return std::pow(k_induced / (3.0 * rho_bar * rho_bar * cd0), 0.25);
}

double AircraftParams::level_lift(double v_bar) const { return 1.0 / (rho_bar * v_bar * v_bar); }

AircraftParams default_aircraft(const NormalizationBasis& basis, double altitude_ft) {
    AircraftParams p;
    p.rho_bar = normalized_density(basis, isa_density(altitude_ft));
    p.apply_speed_rule();
    p.validate();
    return p;
}

void GuidanceConfig::validate(const NormalizationBasis& basis) const {
    require_positive(dt_update, "dt_update");
    require_positive(dv_max, "dv_max");
    require_positive(dpsi_max, "dpsi_max");
    require_positive(fd_step_v, "fd_step_v");
    require_positive(fd_step_psi, "fd_step_psi");
    require_positive(levenberg_lambda0, "levenberg_lambda0");
    require(fd_step_v < basis.normalize(dv_max, QuantityKind::speed), ErrorClass::invalid_argument,
            "fd_step_v must be smaller than the normalized dv_max");
    require(fd_step_psi < dpsi_max, ErrorClass::invalid_argument,
            "fd_step_psi must be smaller than dpsi_max");
}

GuidanceBounds normalize(const GuidanceConfig& config, const NormalizationBasis& basis) {
    config.validate(basis);
    return GuidanceBounds{
        .dt_bar = basis.normalize(config.dt_update, QuantityKind::time),
        .dv_bar_max = basis.normalize(config.dv_max, QuantityKind::speed),
        .dpsi_max = config.dpsi_max,
        .fd_step_v = config.fd_step_v,
        .fd_step_psi = config.fd_step_psi,
        .lambda0 = config.levenberg_lambda0,
    };
}

State normalize_state(const PhysicalState& s, const NormalizationBasis& basis) {
    basis.validate();
    return State{
        .v_bar = basis.normalize(s.v, QuantityKind::speed),
        .psi = basis.normalize(s.psi, QuantityKind::angle),
        .gamma = basis.normalize(s.gamma, QuantityKind::angle),
        .x_bar = basis.normalize(s.x, QuantityKind::distance),
        .y_bar = basis.normalize(s.y, QuantityKind::distance),
        .h_bar = basis.normalize(s.h, QuantityKind::distance),
    };
}

PhysicalState denormalize_state(const State& s, const NormalizationBasis& basis) {
    basis.validate();
    return PhysicalState{
        .v = basis.denormalize(s.v_bar, QuantityKind::speed),
        .psi = basis.denormalize(s.psi, QuantityKind::angle),
        .gamma = basis.denormalize(s.gamma, QuantityKind::angle),
        .x = basis.denormalize(s.x_bar, QuantityKind::distance),
        .y = basis.denormalize(s.y_bar, QuantityKind::distance),
        .h = basis.denormalize(s.h_bar, QuantityKind::distance),
    };
}

}  // namespace windguide
