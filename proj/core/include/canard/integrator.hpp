#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "canard/errors.hpp"
#include "canard/relief.hpp"

namespace canard {

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    unsigned precision_digits = 16;  // <= 16: hardware double; above: big-float
    std::size_t max_steps = 4000000;
    double min_step = 1e-14;  // relative to segment parameter length 1
    bool record_dense = false;
};

template <typename C>
struct DenseSample {
    double s;  // arclength-like parameter along the whole path
    C x;
    C y;
};

template <typename C>
struct Trajectory {
    C end_value{};
    std::vector<DenseSample<C>> dense_samples;
    std::size_t step_count = 0;
    std::size_t rejected_steps = 0;
};

// Dormand-Prince 5(4) embedded pair with a PI step controller, applied to
// dy/ds = gamma'(s) G(gamma(s), y) segment by segment along a polyline.
// The right-hand side G is any callable C(C x, C y); it may throw
// PoleEncountered itself (the catalog fields that divide by the state do).
template <typename C, typename RHS>
Trajectory<C> integrate_path(RHS&& G, const std::vector<C>& points, C y0,
                             const IntegratorConfig& cfg) {
    if (points.size() < 2) throw DegeneratePath("integrate_path: need at least two path points");

    using std::abs;
    Trajectory<C> traj;
    C y = y0;
    double global_s = 0.0;
    if (cfg.record_dense) traj.dense_samples.push_back({0.0, points[0], y});

    for (std::size_t seg = 0; seg + 1 < points.size(); ++seg) {
        const C x0 = points[seg];
        const C delta = points[seg + 1] - points[seg];
        auto f = [&](double s, const C& yy) { return delta * G(x0 + s * delta, yy); };

        double s = 0.0;
        double h = 1e-3;
        double prev_err = 1.0;
        while (s < 1.0) {
            if (h < cfg.min_step) throw StepUnderflow("integrate_path: step size underflow");
            if (traj.step_count + traj.rejected_steps > cfg.max_steps)
                throw MaxStepsExceeded("integrate_path: step budget exhausted");
            if (s + h > 1.0) h = 1.0 - s;

            const C k1 = f(s, y);
            const C k2 = f(s + h / 5.0, y + C(h) * (C(1.0 / 5) * k1));
            const C k3 = f(s + 3 * h / 10.0, y + C(h) * (C(3.0 / 40) * k1 + C(9.0 / 40) * k2));
            const C k4 = f(s + 4 * h / 5.0,
                           y + C(h) * (C(44.0 / 45) * k1 - C(56.0 / 15) * k2 + C(32.0 / 9) * k3));
            const C k5 =
                f(s + 8 * h / 9.0,
                  y + C(h) * (C(19372.0 / 6561) * k1 - C(25360.0 / 2187) * k2 +
                              C(64448.0 / 6561) * k3 - C(212.0 / 729) * k4));
            const C k6 = f(s + h, y + C(h) * (C(9017.0 / 3168) * k1 - C(355.0 / 33) * k2 +
                                              C(46732.0 / 5247) * k3 + C(49.0 / 176) * k4 -
                                              C(5103.0 / 18656) * k5));
            const C y5 = y + C(h) * (C(35.0 / 384) * k1 + C(500.0 / 1113) * k3 +
                                     C(125.0 / 192) * k4 - C(2187.0 / 6784) * k5 + C(11.0 / 84) * k6);
            const C k7 = f(s + h, y5);
            const C y4 = y + C(h) * (C(5179.0 / 57600) * k1 + C(7571.0 / 16695) * k3 +
                                     C(393.0 / 640) * k4 - C(92097.0 / 339200) * k5 +
                                     C(187.0 / 2100) * k6 + C(1.0 / 40) * k7);

            const double err_abs = static_cast<double>(abs(y5 - y4));
            const double scale =
                cfg.abs_tol +
                cfg.rel_tol * std::max(static_cast<double>(abs(y)), static_cast<double>(abs(y5)));
            const double err = err_abs / scale;

            if (err <= 1.0) {
                s += h;
                y = y5;
                ++traj.step_count;
                if (cfg.record_dense)
                    traj.dense_samples.push_back({global_s + s, x0 + s * delta, y});
                // PI controller (Gustafsson-style exponents for order 5).
                const double e = std::max(err, 1e-10);
                double fac = 0.9 * std::pow(e, -0.7 / 5.0) * std::pow(prev_err, 0.4 / 5.0);
                h *= std::clamp(fac, 0.2, 5.0);
                prev_err = e;
            } else {
                ++traj.rejected_steps;
                h *= std::max(0.2, 0.9 * std::pow(err, -1.0 / 5.0));
            }
        }
        global_s += 1.0;
    }
    traj.end_value = y;
    return traj;
}

}  // namespace canard
