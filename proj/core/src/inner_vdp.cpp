#include "canard/inner_vdp.hpp"

#include <cmath>

#include "canard/airy.hpp"
#include "canard/errors.hpp"

namespace canard {

namespace {

using C = std::complex<double>;

const double kMu = std::cbrt(0.25);  // (1/4)^{1/3}

C X_of_z(unsigned branch, C z) {
    const C j = std::polar(1.0, 2.0 * M_PI / 3.0);
    C jk(1);
    for (unsigned i = 0; i < branch % 3; ++i) jk *= j;
    // The ratio is formed in extended precision: on these rays Ai itself
    // overflows double already around |z| ~ 105.
    const C ratio = airy_ratio(-kMu * jk * z);
    if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag()))
        throw ZeroOfY0("vdp_inner_Y0: Ai vanished along the branch");
    return 2.0 * kMu * jk * ratio;
}

}  // namespace

C vdp_inner_Y0(C X, unsigned branch) {
    // Newton on X_k(z) = X, seeded by the leading asymptotics z ~ -X^2.
    C z = -X * X;
    C r = X_of_z(branch, z) - X;
    for (int it = 0; it < 80; ++it) {
        if (std::abs(r) < 1e-13 * std::max(1.0, std::abs(X))) return X * X + z;
        const C xk = r + X;
        const C dXdz = (xk * xk + z) / 2.0;
        if (std::abs(dXdz) == 0.0) throw NewtonDivergence("vdp_inner_Y0: zero derivative");
        C step = r / dXdz;
        // Damp while the residual refuses to shrink.
        for (int half = 0; half < 30; ++half) {
            const C r2 = X_of_z(branch, z - step) - X;
            if (std::abs(r2) < std::abs(r)) {
                z -= step;
                r = r2;
                break;
            }
            step *= 0.5;
            if (half == 29) throw NewtonDivergence("vdp_inner_Y0: damping failed");
        }
    }
    throw NewtonDivergence("vdp_inner_Y0: no convergence");
}

C vdp_stokes_diff(double X) {
    const C plus = vdp_inner_Y0(C(X, 0), 2);
    const C minus = vdp_inner_Y0(C(X, 0), 1);
    const C diff = plus - minus;
    const double scale = std::max(std::abs(plus), std::abs(minus));
    if (std::abs(diff) < 1e3 * 2.2e-16 * scale)
        throw PrecisionLoss("vdp_stokes_diff: difference below 1e3 ulp of the branch values");
    return diff;
}

double vdp_stokes_formula(double X) {
    return 4.0 / M_E * X * X * std::exp(-2.0 * X * X * X / 3.0);
}

}  // namespace canard
