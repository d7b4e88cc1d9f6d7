#include "canard/bigfloat.hpp"

#include "canard/errors.hpp"

namespace canard {

namespace {

// MPFR handles millions of digits, but an absurd request is more likely a
// bug than a need; refuse instead of stalling.
constexpr unsigned kMaxDigits = 100000;

unsigned working_digits(unsigned digits) {
    if (digits == 0 || digits > kMaxDigits)
        throw InsufficientPrecision("requested digits out of supported range");
    // Guard digits cover the log-domain round trip.
    return digits + 15;
}

}  // namespace

BigFloat rat_log_abs(const Rat& q, unsigned digits) {
    const unsigned wd = working_digits(digits);
    if (q == 0) throw ZeroCoefficient("rat_log_abs of zero");
    // The abs() expression template must be collapsed to a plain integer
    // first: the (expression, digits) BigFloat constructor converts it through
    // a lossy intermediate and can land one ulp low.
    const Int num = abs(rat_num(q));
    const Int den = rat_den(q);
    BigFloat n(num, wd);
    BigFloat d(den, wd);
    return log(n) - log(d);
}

BigFloat vdp_bn(const VdpSeries& series, unsigned n, unsigned digits) {
    const unsigned wd = working_digits(digits);
    if (n < 1 || n >= series.a.size())
        throw Error("vdp_bn: n outside the computed series range");
    const Rat& an = series.a[n];
    if (an == 0) throw ZeroCoefficient("vdp_bn: a_n = 0");
    BigFloat one(1, wd);
    BigFloat ln_factor = log(BigFloat(4, wd)) + one - log(BigFloat(3, wd)) - log(BigFloat(n, wd));
    BigFloat ln_abs = rat_log_abs(an, digits) + BigFloat(n, wd) * ln_factor;
    BigFloat mag = exp(ln_abs);
    return an < 0 ? BigFloat(-mag) : mag;
}

BigFloat vdp_theoretical_constant(unsigned digits) {
    const unsigned wd = working_digits(digits);
    BigFloat three(3, wd), four(4, wd);
    BigFloat pi = four * atan(BigFloat(1, wd));
    return -four * sqrt(three) / (pi * exp(four / three));
}

}  // namespace canard
