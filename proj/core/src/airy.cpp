#include "canard/airy.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "canard/bigfloat.hpp"

namespace canard {

namespace {

// Minimal complex-on-BigFloat: just what the Maclaurin summation needs.
struct CX {
    BigFloat re, im;
};

CX operator+(const CX& a, const CX& b) { return {a.re + b.re, a.im + b.im}; }

CX operator*(const CX& a, const CX& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CX scaled(const CX& a, const BigFloat& s) { return {a.re * s, a.im * s}; }

BigFloat abs2(const CX& a) { return a.re * a.re + a.im * a.im; }

}  // namespace

namespace {

std::pair<CX, CX> airy_mp(std::complex<double> z) {
    const double r = std::abs(z);
    // The partial sums peak at about exp((2/3) r^{3/2}) while near the
    // anti-Stokes rays the answer itself carries a subdominant piece another
    // factor exp(-(4/3) r^{3/2}) below the dominant one, so the precision must
    // absorb roughly exp((8/3) r^{3/2}) of cancellation, plus guard digits.
    const unsigned digits =
        30 + static_cast<unsigned>(std::ceil(8.0 / 3.0 * std::pow(r, 1.5) / std::log(10.0)));

    const CX zz{BigFloat(z.real(), digits), BigFloat(z.imag(), digits)};
    const CX z2 = zz * zz;
    const CX z3 = z2 * zz;

    // Ai = c1 f - c2 g with f = sum a_m z^{3m}, g = z sum b_m z^{3m},
    // a_0 = b_0 = 1, a_{m+1} = a_m/((3m+2)(3m+3)), b_{m+1} = b_m/((3m+3)(3m+4)).
    // Ai' = c1 f' - c2 g' with f' = z^2 sum 3(m+1) a_{m+1} z^{3m} and
    // g' = sum (3m+1) b_m z^{3m}.
    const BigFloat three(3, digits);
    const BigFloat c1 =
        pow(three, BigFloat(-2, digits) / 3) / boost::math::tgamma(BigFloat(2, digits) / 3);
    const BigFloat c2 =
        pow(three, BigFloat(-1, digits) / 3) / boost::math::tgamma(BigFloat(1, digits) / 3);

    const CX zero{BigFloat(0, digits), BigFloat(0, digits)};
    CX ta{BigFloat(1, digits), BigFloat(0, digits)};  // a_m z^{3m}
    CX tb = ta;                                       // b_m z^{3m}
    CX sf = zero, sg = zero, sfp = zero, sgp = zero;

    const BigFloat tiny = pow(BigFloat(10, digits), -(static_cast<int>(digits) + 5));
    BigFloat peak2(1, digits);

    for (long m = 0; m < 100000; ++m) {
        sf = sf + ta;
        sg = sg + tb;
        sfp = sfp + scaled(ta, BigFloat(3 * (m + 1), digits) / ((3 * m + 2) * (3 * m + 3)));
        sgp = sgp + scaled(tb, BigFloat(3 * m + 1, digits));

        const BigFloat m2 = abs2(ta) + abs2(tb);
        if (m2 > peak2) peak2 = m2;
        if (m > 2 && m2 < tiny * tiny * peak2) break;

        ta = scaled(ta * z3, BigFloat(1, digits) / ((3 * m + 2) * (3 * m + 3)));
        tb = scaled(tb * z3, BigFloat(1, digits) / ((3 * m + 3) * (3 * m + 4)));
    }

    const CX ai = scaled(sf, c1) + scaled(sg * zz, -c2);
    const CX aip = scaled(sfp * z2, c1) + scaled(sgp, -c2);
    return {ai, aip};
}

}  // namespace

std::pair<std::complex<double>, std::complex<double>> airy(std::complex<double> z) {
    auto [ai, aip] = airy_mp(z);
    return {std::complex<double>(static_cast<double>(ai.re), static_cast<double>(ai.im)),
            std::complex<double>(static_cast<double>(aip.re), static_cast<double>(aip.im))};
}

std::complex<double> airy_ratio(std::complex<double> z) {
    auto [ai, aip] = airy_mp(z);
    const BigFloat d = abs2(ai);
    const CX q{(aip.re * ai.re + aip.im * ai.im) / d, (aip.im * ai.re - aip.re * ai.im) / d};
    return {static_cast<double>(q.re), static_cast<double>(q.im)};
}

std::pair<std::complex<double>, std::complex<double>> airy_branch(unsigned k,
                                                                  std::complex<double> z) {
    const std::complex<double> j = std::polar(1.0, 2.0 * M_PI / 3.0);
    std::complex<double> jk(1);
    for (unsigned i = 0; i < k % 3; ++i) jk *= j;
    auto [ai, aip] = airy(jk * z);
    return {ai, jk * aip};
}

}  // namespace canard
