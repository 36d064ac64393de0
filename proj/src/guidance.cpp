#include "windguide/guidance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "windguide/error.hpp"

namespace windguide {

namespace {

constexpr double kMinQLevel = 1e-9;
constexpr double kMinEigenvalue = 1e-8;
constexpr double kMaxLambda = 1e6;

struct Vec2 {
    double v, psi;
};

// Symmetric 2x2 [a b; b c].
struct Sym2 {
    double a, b, c;

    double min_eigenvalue() const {
        const double mean = 0.5 * (a + c);
        const double half_diff = 0.5 * (a - c);
        return mean - std::hypot(half_diff, b);
    }
};

// (H^T H + lambda I) d = -H^T g for symmetric H.
Vec2 regularized_step(const Sym2& h, const Vec2& g, double lambda) {
    const double n11 = h.a * h.a + h.b * h.b + lambda;
    const double n12 = h.a * h.b + h.b * h.c;
    const double n22 = h.b * h.b + h.c * h.c + lambda;
    const double r1 = -(h.a * g.v + h.b * g.psi);
    const double r2 = -(h.b * g.v + h.c * g.psi);
    const double det = n11 * n22 - n12 * n12;
    if (!(std::abs(det) > 0.0)) return {0.0, 0.0};
    return {(n22 * r1 - n12 * r2) / det, (n11 * r2 - n12 * r1) / det};
}

}  // namespace

std::string_view to_string(AdjustmentStatus status) {
    switch (status) {
        case AdjustmentStatus::accepted: return "accepted";
        case AdjustmentStatus::no_improvement: return "no_improvement";
        case AdjustmentStatus::regularization_exhausted: return "regularization_exhausted";
        case AdjustmentStatus::non_finite: return "non_finite";
    }
    return "unknown";
}

double ProjectedPower::effective() const {
    return feasible && std::isfinite(value) ? value : std::numeric_limits<double>::infinity();
}

double steady_level_power(double v_bar, double w_v_rate, const AircraftParams& p) {
    require(v_bar > 0.0, ErrorClass::invalid_argument, "steady_level_power requires v_bar > 0");
    return p.rho_bar * v_bar * v_bar * v_bar * p.cd0 + p.k_induced / (p.rho_bar * v_bar) +
           v_bar * w_v_rate;
}

double q_level(const ProjectedPowerInputs& in) {
    const auto& g = in.wind.gradient;
    const double two_dt = 2.0 / in.dt_bar;
    return two_dt * two_dt - two_dt * (g[kX][kX] + g[kY][kY]) +
           (g[kX][kX] * g[kY][kY] - g[kX][kY] * g[kY][kX]);
}

void check_horizon(const ProjectedPowerInputs& in) {
    require(std::isfinite(in.dt_bar) && in.dt_bar > 0.0, ErrorClass::invalid_argument,
            "projection horizon must be > 0");
    const double q = q_level(in);
    require(std::abs(q) >= kMinQLevel, ErrorClass::degenerate_horizon,
            "Q_level = " + std::to_string(q) + " is singular; shrink the update interval");
}

PositionIncrement position_increment(const ProjectedPowerInputs& in, double d_v, double d_psi) {
    check_horizon(in);
    const auto& g = in.wind.gradient;
    const auto& tp = in.wind.time_partial;
    const double dt = in.dt_bar;
    const double v0 = in.state.v_bar, psi0 = in.state.psi;
    const double vc = v0 + d_v, psic = psi0 + d_psi;

    // Trapezoid on x' = V sin(psi) + W_x with W_x(t0+dt) from the frozen
    // gradients, multiplied through by 2/dt.
    const double b1 = v0 * std::sin(psi0) + vc * std::sin(psic) + 2.0 * in.wind.w_x() + tp[kX] * dt;
    const double b2 = v0 * std::cos(psi0) + vc * std::cos(psic) + 2.0 * in.wind.w_y() + tp[kY] * dt;
    const double two_dt = 2.0 / dt;
    const double q = q_level(in);
    return PositionIncrement{
        .dx_bar = ((two_dt - g[kY][kY]) * b1 + g[kX][kY] * b2) / q,
        .dy_bar = (g[kY][kX] * b1 + (two_dt - g[kX][kX]) * b2) / q,
    };
}

double projected_wind_rate(const ProjectedPowerInputs& in, double d_v, double d_psi) {
    const PositionIncrement d = position_increment(in, d_v, d_psi);
    const auto& g = in.wind.gradient;
    const auto& tp = in.wind.time_partial;
    const double dt = in.dt_bar;
    const double wx = in.wind.w_x() + g[kX][kX] * d.dx_bar + g[kX][kY] * d.dy_bar + tp[kX] * dt;
    const double wy = in.wind.w_y() + g[kY][kX] * d.dx_bar + g[kY][kY] * d.dy_bar + tp[kY] * dt;

    const double v = in.state.v_bar + d_v;
    const double psi = in.state.psi + d_psi;
    const double s = std::sin(psi), c = std::cos(psi);
    return (g[kX][kY] + g[kY][kX]) * v * s * c + g[kX][kX] * v * s * s + g[kY][kY] * v * c * c +
           (wx * g[kX][kX] + wy * g[kX][kY] + tp[kX]) * s +
           (wx * g[kY][kX] + wy * g[kY][kY] + tp[kY]) * c;
}

ProjectedPower projected_power(const ProjectedPowerInputs& in, double d_v, double d_psi,
                               const AircraftParams& p) {
    const double v = in.state.v_bar + d_v;
    const bool feasible = v >= p.v_bar_min && v <= p.v_bar_max;
    if (!(v > 0.0)) return {std::numeric_limits<double>::infinity(), false};
    return {steady_level_power(v, projected_wind_rate(in, d_v, d_psi), p), feasible};
}

AdmissibleBox admissible_box(const State& s, const GuidanceBounds& b, const AircraftParams& p) {
    AdmissibleBox box{
        .dv_lo = std::max(-b.dv_bar_max, p.v_bar_min - s.v_bar),
        .dv_hi = std::min(b.dv_bar_max, p.v_bar_max - s.v_bar),
        .dpsi_lo = -b.dpsi_max,
        .dpsi_hi = b.dpsi_max,
    };
    // Outside the envelope: only steps back toward it are admissible.
    if (box.dv_lo > box.dv_hi) {
        const double back = box.dv_lo > 0.0 ? box.dv_lo : box.dv_hi;
        box.dv_lo = box.dv_hi = back;
    }
    return box;
}

Adjustment optimal_adjustment(const ProjectedPowerInputs& in, const GuidanceBounds& b,
                              const AircraftParams& p, AdjustmentMode mode) {
    check_horizon(in);
    Adjustment adj;
    const double hv = b.fd_step_v, hp = b.fd_step_psi;
    auto f = [&](double dv, double dpsi) { return projected_power(in, dv, dpsi, p).value; };

    const double f0 = f(0.0, 0.0);
    const double fvp = f(hv, 0.0), fvm = f(-hv, 0.0);
    const double fpp = f(0.0, hp), fpm = f(0.0, -hp);
    const double fpp_pp = f(hv, hp), fpp_pm = f(hv, -hp), fpp_mp = f(-hv, hp),
                 fpp_mm = f(-hv, -hp);
    const ProjectedPower zero = projected_power(in, 0.0, 0.0, p);
    adj.baseline_power = zero.effective();
    adj.predicted_power = adj.baseline_power;

    for (double v : {f0, fvp, fvm, fpp, fpm, fpp_pp, fpp_pm, fpp_mp, fpp_mm}) {
        if (!std::isfinite(v)) {
            adj.status = AdjustmentStatus::non_finite;
            return adj;
        }
    }

    Vec2 grad{(fvp - fvm) / (2.0 * hv), (fpp - fpm) / (2.0 * hp)};
    Sym2 hess{
        (fvp - 2.0 * f0 + fvm) / (hv * hv),
        (fpp_pp - fpp_pm - fpp_mp + fpp_mm) / (4.0 * hv * hp),
        (fpp - 2.0 * f0 + fpm) / (hp * hp),
    };
    adj.gradient = {grad.v, grad.psi, 0.0};
    adj.hessian[0] = {hess.a, hess.b, 0.0};
    adj.hessian[1] = {hess.b, hess.c, 0.0};

    AdmissibleBox box = admissible_box(in.state, b, p);
    const bool speed_only = mode == AdjustmentMode::airspeed_only;
    if (speed_only) {
        // Decouple the heading row so the solve below is the scalar Newton
        // step in airspeed; the heading box collapses to zero.
        grad.psi = 0.0;
        hess.b = 0.0;
        hess.c = 1.0;
        box.dpsi_lo = box.dpsi_hi = 0.0;
    }
    struct Clamped {
        Vec2 step;
        std::array<bool, 2> hit;
    };
    auto clamp = [&](const Vec2& d) {
        Clamped c{{std::clamp(d.v, box.dv_lo, box.dv_hi), std::clamp(d.psi, box.dpsi_lo, box.dpsi_hi)},
                  {false, false}};
        c.hit = {c.step.v != d.v, !speed_only && c.step.psi != d.psi};
        return c;
    };
    auto objective = [&](const Vec2& d) { return projected_power(in, d.v, d.psi, p).effective(); };

    Vec2 raw{0.0, 0.0};
    const double min_eig = speed_only ? hess.a : hess.min_eigenvalue();
    if (min_eig >= kMinEigenvalue) {
        raw = regularized_step(hess, grad, 0.0);
    } else {
        double lambda = b.lambda0;
        for (;;) {
            raw = regularized_step(hess, grad, lambda);
            if (objective(clamp(raw).step) < adj.baseline_power) break;
            lambda *= 2.0;
            if (lambda > kMaxLambda) {
                adj.lambda_used = lambda;
                adj.status = AdjustmentStatus::regularization_exhausted;
                return adj;
            }
        }
        adj.lambda_used = lambda;
    }

    const Clamped c = clamp(raw);
    const double candidate = objective(c.step);
    if (!std::isfinite(candidate) || !(candidate <= adj.baseline_power)) {
        adj.status = AdjustmentStatus::no_improvement;
        return adj;
    }
    adj.d_v_bar = c.step.v;
    adj.d_psi = c.step.psi;
    adj.clamped = c.hit;
    adj.predicted_power = candidate;
    adj.status = AdjustmentStatus::accepted;
    return adj;
}

}  // namespace windguide
