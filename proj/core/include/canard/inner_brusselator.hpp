#pragma once

#include <complex>

namespace canard {

// Two-branch inner solution of the Brusselator inner equation, built from the
// linear equation z'' + v z' + 2 z = 0: with
//   I(v) = int_{i inf}^{v} e^{w^2/2}/w^2 dw + C,
//   C = 0 ('plus' branch) or C = i sqrt(2 pi) ('minus' branch),
// the Riccati solution is
//   t(v) = ((v^2-1) e^{-v^2/2} I(v) - 1/v) / (v e^{-v^2/2} I(v)),
// satisfying dt/dv = t^2 + 2 - v t and t(v) ~ 2/v at infinity.
enum class BrusselatorBranch { plus, minus };

std::complex<double> brusselator_inner_t(std::complex<double> v, BrusselatorBranch branch);

// Inverts t(v) = 1/X by Newton (derivative t^2 + 2 - v t, seed v = 2X) and
// returns Y0 = -t^3 - 2t + t^2 v with t = 1/X.
std::complex<double> brusselator_inner_Y0(std::complex<double> X, BrusselatorBranch branch);

// Y0+(X) - Y0-(X) on the positive real axis.
std::complex<double> brusselator_stokes_diff(double X);

// 32 sqrt(2 pi) X^4 e^{-2X^2}, the modulus of the stated Lemma-19 equivalent.
double brusselator_stokes_formula(double X);

// Quadrature check of int_{-i inf}^{+i inf} e^{w^2/2}/w^2 dw.  The integrand
// has a residue-free double pole at 0, so the contour is shifted to the
// parallel line Re w = 1 (path independence makes the value identical).
std::complex<double> brusselator_integral_identity();

}  // namespace canard
