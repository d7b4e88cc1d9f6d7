#pragma once

#include <complex>

#include "canard/integrator.hpp"
#include "canard/relief.hpp"

namespace canard {

struct ShootConfig {
    // 0 = automatic schedule: 16 digits for eps >= 0.08, 40 below.
    unsigned precision_digits = 0;
    // 0 = automatic: 1e-13 in double, 1e-24 in big-float.
    double match_tol = 0.0;
    unsigned max_iterations = 60;
    double ode_rel_tol = 0.0;  // 0 = automatic per precision
};

struct ShootResult {
    Cplx parameter;       // alpha+ (VdP) or a+ (Brusselator)
    Cplx residual;        // final mismatch at the match point
    unsigned iterations = 0;
    unsigned precision_digits = 16;
};

// Both integration paths of a shoot, with their initial values.
struct ShootPaths {
    ComplexPath path_a, path_b;
    Cplx y_a0, y_b0;
    Cplx match_point;
};

// Van der Pol: path N = [-1+10i -> 0 -> 1] with v = i/10, path E = [9 -> 1]
// with v = -1/10, matched at u = 1; secant iteration in alpha seeded by the
// two-term formal series 1 - eps/8 - 3 eps^2/32.
ShootPaths vdp_shoot_paths();
ShootResult find_vdp_alpha(double eps, const ShootConfig& cfg = {});
// Same shoot on caller-supplied paths/initial values (path-independence and
// insensitivity experiments; the paths must still descend the relief).
ShootResult find_vdp_alpha(double eps, const ShootConfig& cfg, const ShootPaths& paths);

// 2 Im(alpha+) e^{4/(3 eps)} sqrt(eps), the scaled Stokes observable.
double vdp_stokes_observable(double eps, const ShootResult& r);

// Brusselator: east path [1.5 -> 0]; north path from the summit located by
// maximizing R on |x| = 1.8 restricted to the north-west quadrant, taken in
// the lower half plane so that Im(a+) > 0, joined to 0 through the descending
// waypoint 0.6 e^{-0.78 i pi}.  Matched at x = 0, secant in a seeded by
// 1 + (3/2) eps + (15/8) eps^2.  Initial values sit on the slow curve
// z = 1/(2(1+x)^3).
ShootPaths brusselator_shoot_paths();
ShootResult find_brusselator_a(double eps, const ShootConfig& cfg = {});

// 2 Im(a+) e^{2/(3 eps)} eps^3.
double brusselator_stokes_observable(double eps, const ShootResult& r);

}  // namespace canard
