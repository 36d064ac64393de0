// Parametric wind fields with analytic gradients.
//
// The deterministic part is a sinusoidal magnitude field aligned with the
// wind direction psi_w (direction the air moves toward, clockwise from north):
//
//   s          = x sin(psi_w) + y cos(psi_w)
//   W_m(x, y)  = w_m sin(omega_w s + phase)
//   (W_x, W_y) = W_m (sin psi_w, cos psi_w),  W_h = 0
//
// A uniform field is the omega_w = 0, phase = pi/2 member of the family. An
// optional Ornstein-Uhlenbeck layer perturbs W_x and W_y in time.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "windguide/airframe.hpp"
#include "windguide/state.hpp"

namespace windguide {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

enum Axis : std::size_t { kX = 0, kY = 1, kH = 2 };

/// In-situ wind measurement, normalized. gradient[i][j] = dW_i / dq_j with
/// q = (x_bar, y_bar, h_bar).
struct WindSample {
    Vec3 components{};
    Mat3 gradient{};
    Vec3 time_partial{};
    /// Total along-path rates W'_i; only filled by advect().
    Vec3 rate{};

    double w_x() const { return components[kX]; }
    double w_y() const { return components[kY]; }
    double w_h() const { return components[kH]; }
};

enum class WindKind { constant, sinusoidal, sinusoidal_stochastic };

std::string_view to_string(WindKind kind);
WindKind parse_wind_kind(std::string_view text);

/// Physical-unit field description.
struct WindFieldParams {
    WindKind kind = WindKind::sinusoidal;
    double w_m = 10.0;         ///< amplitude [ft/s]
    double psi_w = 0.0;        ///< direction [rad]
    double omega_w = 0.05;     ///< spatial frequency [rad/ft]
    double phase = 0.0;        ///< [rad]
    double ou_sigma = 0.0;     ///< [ft/s]
    double ou_tau = 2.0;       ///< [s]
    double ou_clock_hz = 50.0; ///< perturbation update clock [Hz]
    std::optional<std::uint64_t> seed;

    void validate() const;
};

class WindField {
public:
    /// Identically zero field.
    WindField() = default;

    /// Uniform field with normalized components.
    static WindField uniform(double w_x_bar, double w_y_bar);

    /// Components, gradients and time partials at a normalized point and time.
    /// rate is left zero.
    WindSample sample(double x_bar, double y_bar, double h_bar, double t_bar) const;

    /// sample() at the state's position plus the along-path rates
    /// W'_i = sum_j dW_i/dq_j q'_j + dW_i/dt, with q' from the kinematic
    /// equations using this sample's own components.
    WindSample advect(const State& state, double t_bar) const;

    bool stochastic() const { return ou_.has_value(); }

    // Normalized parameters of the deterministic part.
    double amplitude() const { return amplitude_; }
    double wavenumber() const { return wavenumber_; }

private:
    friend WindField make_sinusoidal(const WindFieldParams&, const NormalizationBasis&);
    friend WindField make_stochastic_layer(const WindField&, const WindFieldParams&,
                                           const NormalizationBasis&);

    // Exact discretization of dη = -η/τ dt + σ sqrt(2/τ) dW on a fixed clock;
    // values are held between ticks. Not safe to share across threads: the
    // history is extended lazily on query.
    struct OuLayer {
        double sigma;
        double tau;
        double tick;
        double decay;
        double diffusion;
        mutable std::mt19937_64 rng;
        mutable std::normal_distribution<double> normal{0.0, 1.0};
        mutable std::vector<std::array<double, 2>> history;

        const std::array<double, 2>& at(double t_bar) const;
    };

    double amplitude_ = 0.0;
    double dir_sin_ = 0.0;
    double dir_cos_ = 1.0;
    double wavenumber_ = 0.0;
    double phase_ = 0.0;
    std::optional<OuLayer> ou_;
};

/// Deterministic field in normalized units. The constant kind ignores omega_w
/// and phase and yields a uniform wind of magnitude w_m toward psi_w.
WindField make_sinusoidal(const WindFieldParams& params, const NormalizationBasis& basis);

/// Copy of base with an OU perturbation on W_x and W_y. Spatial partials stay
/// those of base; the time partial is the OU drift -eta/tau. sigma = 0 gives
/// back base unchanged.
WindField make_stochastic_layer(const WindField& base, const WindFieldParams& params,
                                const NormalizationBasis& basis);

/// Dispatches on params.kind.
WindField make_wind_field(const WindFieldParams& params, const NormalizationBasis& basis);

}  // namespace windguide
