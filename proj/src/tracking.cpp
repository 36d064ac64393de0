#include "windguide/tracking.hpp"

#include <algorithm>
#include <cmath>

#include "windguide/error.hpp"

namespace windguide {

void TrackingGains::validate() const {
    require(std::isfinite(k_v) && k_v > 0.0 && std::isfinite(k_psi) && k_psi > 0.0 &&
                std::isfinite(k_gamma) && k_gamma > 0.0,
            ErrorClass::invalid_argument, "tracking gains must be > 0");
}

namespace {

struct BankLaw {
    double num;  // horizontal lift demand
    double den;  // vertical lift demand
};

BankLaw bank_law(const State& s, const VelocityCommand& cmd, const WindRates& w,
                 const TrackingGains& k) {
    require(s.v_bar > 0.0, ErrorClass::singular_state, "control_commands requires v_bar > 0");
    const double v = s.v_bar;
    const double cg = std::cos(s.gamma);
    const BankLaw b{
        .num = w.w_psi_rate - v * cg * k.k_psi * wrap_pi(s.psi - cmd.psi_c),
        .den = cg - w.w_gamma_rate - v * k.k_gamma * (s.gamma - cmd.gamma_c),
    };
    require(std::abs(b.den) >= 1e-9, ErrorClass::singular_tracking,
            "bank-angle law denominator vanished");
    return b;
}

double power_law(const State& s, const VelocityCommand& cmd, const WindRates& w,
                 const TrackingGains& k, const AircraftParams& p, double cl) {
    const double v = s.v_bar;
    return v * (-k.k_v * (v - cmd.v_bar_c) + p.rho_bar * v * v * (p.cd0 + p.k_induced * cl * cl) +
                std::sin(s.gamma) + w.w_v_rate);
}

}  // namespace

Controls control_commands(const State& s, const VelocityCommand& cmd, const WindRates& w,
                          const TrackingGains& k, const AircraftParams& p) {
    const BankLaw b = bank_law(s, cmd, w, k);
    const double v = s.v_bar;
    // Signed so that a push-over demand (den < 0) asks for less lift, not more;
    // the magnitude clip then floors it at cl_min.
    const double cl = std::copysign(std::hypot(b.num, b.den), b.den) / (p.rho_bar * v * v);
    return Controls{.p_bar = power_law(s, cmd, w, k, p, cl), .cl = cl, .mu = std::atan(b.num / b.den)};
}

namespace {

double limit(double value, double lo, double hi, double previous, double max_delta) {
    const double bounded = std::clamp(value, lo, hi);
    return std::clamp(bounded, previous - max_delta, previous + max_delta);
}

}  // namespace

Controls saturate(const Controls& u, const Controls& prev, const AircraftParams& p, double dt) {
    require(dt > 0.0, ErrorClass::invalid_argument, "dt_bar must be > 0");
    return Controls{
        .p_bar = limit(u.p_bar, p.p_min, p.p_max, prev.p_bar, p.p_rate_max * dt),
        .cl = limit(u.cl, p.cl_min, p.cl_max, prev.cl, p.cl_rate_max * dt),
        .mu = limit(u.mu, -p.mu_max, p.mu_max, prev.mu, p.mu_rate_max * dt),
    };
}

Controls track(const State& s, const VelocityCommand& cmd, const WindRates& w,
               const TrackingGains& k, const AircraftParams& p, const Controls& prev, double dt) {
    const Controls ideal = control_commands(s, cmd, w, k, p);
    const Controls limited = saturate(ideal, prev, p, dt);
    if (limited.mu == ideal.mu) return limited;

    // Bank is limited: keep the vertical balance rho V C_L cos(mu) = den / V
    // at the bank actually flown and accept the slower turn.
    const BankLaw b = bank_law(s, cmd, w, k);
    const double v = s.v_bar;
    const double cl = b.den / (p.rho_bar * v * v * std::cos(limited.mu));
    const Controls rebuilt{.p_bar = power_law(s, cmd, w, k, p, cl), .cl = cl, .mu = limited.mu};
    return saturate(rebuilt, prev, p, dt);
}

}  // namespace windguide
