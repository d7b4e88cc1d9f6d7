#pragma once

#include <complex>

namespace canard {

// Airy-based inner slow curve of the Van der Pol equation.  With
// mu = (1/4)^{1/3} and j = e^{2 i pi/3}, the branch-k solution is given
// parametrically by
//   X_k(z) = 2 mu j^k Ai'(-mu j^k z)/Ai(-mu j^k z),   Y0 = X^2 + z,
// inverted by Newton using dX/dz = (X^2 + z)/2.  Branch 2 is Y0+, branch 1
// is Y0- (conjugate on the real axis).
std::complex<double> vdp_inner_Y0(std::complex<double> X, unsigned branch);

// Y0+(X) - Y0-(X); flags precision loss when the difference drowns in
// rounding error of the two evaluations.
std::complex<double> vdp_stokes_diff(double X);

// Lemma-6 equivalent (4/e) X^2 e^{-2X^3/3} (the modulus of the difference;
// the difference itself is i times this).
double vdp_stokes_formula(double X);

}  // namespace canard
