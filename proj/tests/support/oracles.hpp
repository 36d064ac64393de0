// Independent reference computations used only by the tests. Nothing here
// calls into the guidance solver or the RK4 stepper it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "windguide/airframe.hpp"
#include "windguide/windfield.hpp"

namespace oracle {

/// Central difference of a scalar function.
inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Dense explicit-midpoint integration of level-flight kinematics
/// x' = V sin(psi) + W_x, y' = V cos(psi) + W_y with winds extrapolated from
/// frozen gradients, while (V, psi) slew linearly from (v0, psi0) at t = 0 to
/// (vc, psic) at t = slew and hold afterwards.
struct DenseResult {
    double dx, dy;
};

inline DenseResult dense_position(const windguide::WindSample& w, double v0, double psi0,
                                  double vc, double psic, double horizon, double slew,
                                  int steps) {
    using windguide::kX;
    using windguide::kY;
    const auto& g = w.gradient;
    const auto& tp = w.time_partial;
    auto rhs = [&](double t, double x, double y, double& fx, double& fy) {
        const double a = slew > 0.0 ? std::min(t / slew, 1.0) : 1.0;
        const double v = v0 + a * (vc - v0);
        const double psi = psi0 + a * (psic - psi0);
        const double wx = w.w_x() + g[kX][kX] * x + g[kX][kY] * y + tp[kX] * t;
        const double wy = w.w_y() + g[kY][kX] * x + g[kY][kY] * y + tp[kY] * t;
        fx = v * std::sin(psi) + wx;
        fy = v * std::cos(psi) + wy;
    };
    double x = 0.0, y = 0.0;
    const double h = horizon / steps;
    for (int i = 0; i < steps; ++i) {
        const double t = i * h;
        double fx, fy, mx, my;
        rhs(t, x, y, fx, fy);
        rhs(t + 0.5 * h, x + 0.5 * h * fx, y + 0.5 * h * fy, mx, my);
        x += h * mx;
        y += h * my;
    }
    return {x, y};
}

/// Exhaustive search of f over an n x n grid on [a0,a1] x [b0,b1].
struct GridMin {
    double value = std::numeric_limits<double>::infinity();
    double a = 0.0, b = 0.0;
    int ia = -1, ib = -1;
    int n = 0;

    bool interior() const { return ia > 0 && ia < n - 1 && ib > 0 && ib < n - 1; }
};

inline GridMin grid_search(const std::function<double(double, double)>& f, double a0, double a1,
                           double b0, double b1, int n) {
    GridMin best;
    best.n = n;
    for (int i = 0; i < n; ++i) {
        const double a = n == 1 ? a0 : a0 + (a1 - a0) * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double b = n == 1 ? b0 : b0 + (b1 - b0) * j / (n - 1);
            const double v = f(a, b);
            if (v < best.value) best = {v, a, b, i, j, n};
        }
    }
    return best;
}

/// 1D grid minimizer.
inline double grid_argmin(const std::function<double(double)>& f, double lo, double hi,
                          double step) {
    double best_x = lo, best = f(lo);
    for (double x = lo; x <= hi; x += step) {
        const double v = f(x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    return best_x;
}

}  // namespace oracle
