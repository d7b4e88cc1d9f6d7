#pragma once

#include <complex>
#include <utility>

namespace canard {

// Complex Airy function: returns (Ai(z), Ai'(z)).  The entire-function
// Maclaurin series is summed in MPFR arithmetic at a precision chosen from
// |z|: the series cancellation grows like exp((4/3)|z|^{3/2}), and near the
// anti-Stokes rays the subdominant exponential (relative size
// exp(-(8/3)|z|^{3/2}) at worst) must survive the cancellation.  A Poincare
// asymptotic expansion would silently drop exactly that part.  Result is
// correctly rounded to double for any |z| up to a few tens.
std::pair<std::complex<double>, std::complex<double>> airy(std::complex<double> z);

// Rotated branch Ai_k(z) = Ai(j^k z) and its z-derivative j^k Ai'(j^k z).
std::pair<std::complex<double>, std::complex<double>> airy_branch(unsigned k,
                                                                  std::complex<double> z);

// Ai'(z)/Ai(z), with the quotient formed before conversion to double.  On the
// rays arg z = +-2pi/3 both Ai and Ai' grow like exp((2/3)|z|^{3/2}) and
// overflow double beyond |z| ~ 105 while their ratio stays O(sqrt|z|); this is
// the quantity the inner-solution inversions actually need.
std::complex<double> airy_ratio(std::complex<double> z);

}  // namespace canard
