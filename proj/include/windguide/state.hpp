#pragma once

#include <cmath>
#include <numbers>

namespace windguide {

/// Normalized point-mass state. x is east, y is north, heading is measured
/// clockwise from north, so the ground track is (sin psi, cos psi).
struct State {
    double v_bar = 0.0;
    double psi = 0.0;
    double gamma = 0.0;
    double x_bar = 0.0;
    double y_bar = 0.0;
    double h_bar = 0.0;

    bool operator==(const State&) const = default;
};

/// Wraps to [0, 2 pi).
inline double wrap_two_pi(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(angle, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0;
    return a;
}

/// Wraps to (-pi, pi].
inline double wrap_pi(double angle) {
    constexpr double pi = std::numbers::pi;
    double a = wrap_two_pi(angle);
    return a > pi ? a - 2.0 * pi : a;
}

}  // namespace windguide
