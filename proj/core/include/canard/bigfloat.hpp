#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "canard/rational.hpp"
#include "canard/vdp_series.hpp"

namespace canard {

// Variable-precision real (MPFR-backed).  Precision is set per value at
// construction; helpers below work at an explicit digit count instead of the
// global default to stay thread-friendly.
using BigFloat = boost::multiprecision::mpfr_float;

// Natural log of |q| for a nonzero rational with astronomically large
// numerator/denominator, computed as ln|num| - ln|den|.
BigFloat rat_log_abs(const Rat& q, unsigned digits);

// b_n = a_n * (4e/(3n))^n evaluated in the log domain: |a_150| overflows any
// fixed-precision float, but ln|a_n| + n ln(4e/(3n)) is tame.
BigFloat vdp_bn(const VdpSeries& series, unsigned n, unsigned digits = 36);

// -4*sqrt(3)/(pi*e^{4/3}), the limit of the b_n.
BigFloat vdp_theoretical_constant(unsigned digits = 36);

}  // namespace canard
