#include "canard/inner_brusselator.hpp"

#include <cmath>

#include "canard/errors.hpp"

namespace canard {

namespace {

using C = std::complex<long double>;
using Cd = std::complex<double>;

const long double kPi = 3.14159265358979323846L;

C integrand(C w) { return std::exp(w * w / 2.0L) / (w * w); }

// Adaptive Simpson quadrature along the straight segment [a, b].
C simpson_rec(C a, C b, C fa, C fm, C fb, C whole, long double tol, int depth) {
    const C m = (a + b) / 2.0L;
    const C lm = (a + m) / 2.0L, rm = (m + b) / 2.0L;
    const C flm = integrand(lm), frm = integrand(rm);
    const C left = (m - a) / 6.0L * (fa + 4.0L * flm + fm);
    const C right = (b - m) / 6.0L * (fm + 4.0L * frm + fb);
    const C delta = left + right - whole;
    if (depth <= 0) return left + right + delta / 15.0L;
    if (std::abs(delta) <= 15.0L * tol) return left + right + delta / 15.0L;
    return simpson_rec(a, m, fa, flm, fm, left, tol / 2.0L, depth - 1) +
           simpson_rec(m, b, fm, frm, fb, right, tol / 2.0L, depth - 1);
}

C quad_segment(C a, C b, long double tol) {
    const C fa = integrand(a), fb = integrand(b), fm = integrand((a + b) / 2.0L);
    const C whole = (b - a) / 6.0L * (fa + 4.0L * fm + fb);
    return simpson_rec(a, b, fa, fm, fb, whole, tol, 48);
}

// I(v) = int_{i inf}^{v} e^{w^2/2}/w^2 dw: the tail from i*inf down to i*S is
// below 1e-40 (the antiderivative scales like e^{-S^2/2}), so a straight
// segment from i*S to v carries the whole value.
C I_plus(C v) {
    const long double S = 14.0L;
    const long double scale = std::abs(std::exp(v * v / 2.0L) / (v * v * v));
    return quad_segment(C(0.0L, S), v, 1e-16L * std::max(1.0L, scale));
}

C t_of_v(C v, BrusselatorBranch branch) {
    const long double arg = std::arg(v);
    if (arg < -0.7L * kPi || (arg > 0.95L * kPi))
        throw SectorViolation("brusselator_inner_t: v outside the handled sector");
    C I = I_plus(v);
    if (branch == BrusselatorBranch::minus) I += C(0.0L, std::sqrt(2.0L * kPi));
    const C E = std::exp(-v * v / 2.0L);
    const C J = E * I;  // stays O(v^{-3}); no overflow
    return ((v * v - 1.0L) * J - 1.0L / v) / (v * J);
}

}  // namespace

Cd brusselator_inner_t(Cd v, BrusselatorBranch branch) {
    const C t = t_of_v(C(v.real(), v.imag()), branch);
    return Cd(static_cast<double>(t.real()), static_cast<double>(t.imag()));
}

Cd brusselator_inner_Y0(Cd X, BrusselatorBranch branch) {
    const C target = 1.0L / C(X.real(), X.imag());
    C v = 2.0L * C(X.real(), X.imag());  // t ~ 2/v seed
    C r = t_of_v(v, branch) - target;
    bool converged = false;
    for (int it = 0; it < 60 && !converged; ++it) {
        if (std::abs(r) < 1e-15L * std::abs(target)) {
            converged = true;
            break;
        }
        const C t = r + target;
        const C dt = t * t + 2.0L - v * t;  // Riccati derivative
        if (std::abs(dt) == 0.0L) throw NewtonDivergence("brusselator_inner_Y0: zero derivative");
        C step = r / dt;
        bool moved = false;
        for (int half = 0; half < 30; ++half) {
            const C r2 = t_of_v(v - step, branch) - target;
            if (std::abs(r2) < std::abs(r)) {
                v -= step;
                r = r2;
                moved = true;
                break;
            }
            step *= 0.5L;
        }
        if (!moved) {
            converged = std::abs(r) < 1e-12L * std::abs(target);
            break;
        }
    }
    if (!converged && std::abs(r) > 1e-12L * std::abs(target))
        throw NewtonDivergence("brusselator_inner_Y0: no convergence");
    const C t = target;
    const C y0 = -t * t * t - 2.0L * t + t * t * v;
    return Cd(static_cast<double>(y0.real()), static_cast<double>(y0.imag()));
}

Cd brusselator_stokes_diff(double X) {
    const Cd plus = brusselator_inner_Y0(Cd(X, 0), BrusselatorBranch::plus);
    const Cd minus = brusselator_inner_Y0(Cd(X, 0), BrusselatorBranch::minus);
    const Cd diff = plus - minus;
    const double scale = std::max(std::abs(plus), std::abs(minus));
    if (std::abs(diff) < 1e3 * 1.1e-19 * scale)
        throw PrecisionLoss("brusselator_stokes_diff: difference below 1e3 ulp");
    return diff;
}

double brusselator_stokes_formula(double X) {
    return 32.0 * std::sqrt(2.0 * M_PI) * std::pow(X, 4) * std::exp(-2.0 * X * X);
}

Cd brusselator_integral_identity() {
    // Vertical line Re w = 1: beyond |Im w| = 14 the antiderivative bound
    // e^{(1-S^2)/2} is ~1e-42, far below the 1e-8 target.
    const long double S = 14.0L;
    const C val = quad_segment(C(1.0L, -S), C(1.0L, S), 1e-14L);
    return Cd(static_cast<double>(val.real()), static_cast<double>(val.imag()));
}

}  // namespace canard
