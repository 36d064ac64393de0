#include "windguide/windfield.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "windguide/error.hpp"

namespace windguide {

std::string_view to_string(WindKind kind) {
    switch (kind) {
        case WindKind::constant: return "constant";
        case WindKind::sinusoidal: return "sinusoidal";
        case WindKind::sinusoidal_stochastic: return "sinusoidal+stochastic";
    }
    return "unknown";
}

WindKind parse_wind_kind(std::string_view text) {
    if (text == "constant") return WindKind::constant;
    if (text == "sinusoidal") return WindKind::sinusoidal;
    if (text == "sinusoidal+stochastic" || text == "stochastic") return WindKind::sinusoidal_stochastic;
    fail(ErrorClass::invalid_argument, "unknown wind kind '" + std::string(text) + "'");
}

void WindFieldParams::validate() const {
    auto finite = [](double v) { return std::isfinite(v); };
    require(finite(w_m) && finite(psi_w) && finite(omega_w) && finite(phase),
            ErrorClass::invalid_argument, "wind parameters must be finite");
    require(omega_w >= 0.0, ErrorClass::invalid_argument, "omega_w must be >= 0");
    require(finite(ou_sigma) && ou_sigma >= 0.0, ErrorClass::invalid_argument,
            "ou_sigma must be >= 0");
    require(finite(ou_tau) && ou_tau > 0.0, ErrorClass::invalid_argument, "ou_tau must be > 0");
    require(finite(ou_clock_hz) && ou_clock_hz > 0.0, ErrorClass::invalid_argument,
            "ou_clock_hz must be > 0");
    if (kind == WindKind::sinusoidal_stochastic) {
        require(seed.has_value(), ErrorClass::invalid_argument,
                "a seed is mandatory for the stochastic wind layer");
    }
}

WindField WindField::uniform(double w_x_bar, double w_y_bar) {
    WindField f;
    f.amplitude_ = std::hypot(w_x_bar, w_y_bar);
    if (f.amplitude_ > 0.0) {
        f.dir_sin_ = w_x_bar / f.amplitude_;
        f.dir_cos_ = w_y_bar / f.amplitude_;
    }
    f.phase_ = std::numbers::pi / 2.0;
    return f;
}

const std::array<double, 2>& WindField::OuLayer::at(double t_bar) const {
    const double k = std::floor(std::max(t_bar, 0.0) / tick + 1e-9);
    const auto index = static_cast<std::size_t>(k);
    while (history.size() <= index) {
        const auto& prev = history.back();
        const double ex = normal(rng);
        const double ey = normal(rng);
        history.push_back({prev[0] * decay + diffusion * ex, prev[1] * decay + diffusion * ey});
    }
    return history[index];
}

WindSample WindField::sample(double x_bar, double y_bar, [[maybe_unused]] double h_bar,
                             double t_bar) const {
    WindSample s;
    const double arg = wavenumber_ * (x_bar * dir_sin_ + y_bar * dir_cos_) + phase_;
    const double mag = amplitude_ * std::sin(arg);
    const double dmag_ds = amplitude_ * wavenumber_ * std::cos(arg);

    s.components = {mag * dir_sin_, mag * dir_cos_, 0.0};
    // d(s)/dx = sin(psi_w), d(s)/dy = cos(psi_w)
    s.gradient[kX] = {dmag_ds * dir_sin_ * dir_sin_, dmag_ds * dir_sin_ * dir_cos_, 0.0};
    s.gradient[kY] = {dmag_ds * dir_cos_ * dir_sin_, dmag_ds * dir_cos_ * dir_cos_, 0.0};

    if (ou_) {
        const auto& eta = ou_->at(t_bar);
        s.components[kX] += eta[0];
        s.components[kY] += eta[1];
        s.time_partial[kX] = -eta[0] / ou_->tau;
        s.time_partial[kY] = -eta[1] / ou_->tau;
    }
    return s;
}

WindSample WindField::advect(const State& state, double t_bar) const {
    WindSample s = sample(state.x_bar, state.y_bar, state.h_bar, t_bar);
    const double cg = std::cos(state.gamma);
    const Vec3 q_dot = {
        state.v_bar * cg * std::sin(state.psi) + s.components[kX],
        state.v_bar * cg * std::cos(state.psi) + s.components[kY],
        state.v_bar * std::sin(state.gamma) + s.components[kH],
    };
    for (std::size_t i = 0; i < 3; ++i) {
        s.rate[i] = s.gradient[i][kX] * q_dot[kX] + s.gradient[i][kY] * q_dot[kY] +
                    s.gradient[i][kH] * q_dot[kH] + s.time_partial[i];
    }
    return s;
}

WindField make_sinusoidal(const WindFieldParams& params, const NormalizationBasis& basis) {
    params.validate();
    basis.validate();
    WindField f;
    f.amplitude_ = basis.normalize(params.w_m, QuantityKind::speed);
    f.dir_sin_ = std::sin(params.psi_w);
    f.dir_cos_ = std::cos(params.psi_w);
    if (params.kind == WindKind::constant) {
        f.wavenumber_ = 0.0;
        f.phase_ = std::numbers::pi / 2.0;
    } else {
        f.wavenumber_ = basis.normalize(params.omega_w, QuantityKind::wavenumber);
        f.phase_ = params.phase;
    }
    return f;
}

WindField make_stochastic_layer(const WindField& base, const WindFieldParams& params,
                                const NormalizationBasis& basis) {
    require(std::isfinite(params.ou_sigma) && params.ou_sigma >= 0.0, ErrorClass::invalid_argument,
            "ou_sigma must be >= 0");
    require(std::isfinite(params.ou_tau) && params.ou_tau > 0.0, ErrorClass::invalid_argument,
            "ou_tau must be > 0");
    require(params.seed.has_value(), ErrorClass::invalid_argument,
            "a seed is mandatory for the stochastic wind layer");
    WindField f = base;
    if (params.ou_sigma == 0.0) return f;

    const double sigma = basis.normalize(params.ou_sigma, QuantityKind::speed);
    const double tau = basis.normalize(params.ou_tau, QuantityKind::time);
    const double tick = basis.normalize(1.0 / params.ou_clock_hz, QuantityKind::time);
    const double decay = std::exp(-tick / tau);
    WindField::OuLayer layer{
        .sigma = sigma,
        .tau = tau,
        .tick = tick,
        .decay = decay,
        .diffusion = sigma * std::sqrt(1.0 - decay * decay),
        .rng = std::mt19937_64(*params.seed),
        .normal = std::normal_distribution<double>(0.0, 1.0),
        .history = {},
    };
    // Start from the stationary distribution.
    const double x0 = sigma * layer.normal(layer.rng);
    const double y0 = sigma * layer.normal(layer.rng);
    layer.history.push_back({x0, y0});
    f.ou_ = std::move(layer);
    return f;
}

WindField make_wind_field(const WindFieldParams& params, const NormalizationBasis& basis) {
    WindField base = make_sinusoidal(params, basis);
    if (params.kind != WindKind::sinusoidal_stochastic) return base;
    return make_stochastic_layer(base, params, basis);
}

}  // namespace windguide
