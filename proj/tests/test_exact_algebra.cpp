#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "canard/errors.hpp"
#include "canard/polynomial.hpp"
#include "canard/ratfunc.hpp"
#include "canard/series.hpp"

using namespace canard;

namespace {

std::mt19937 rng(20240817);

Rat random_rat() {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return Rat(num(rng), den(rng));
}

Poly random_poly(int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<Rat> c(deg(rng) + 1);
    for (auto& x : c) x = random_rat();
    return Poly(c);
}

Series random_series(unsigned order, bool unit_constant) {
    Series s(order);
    for (unsigned i = 0; i <= order; ++i) s[i] = random_rat();
    if (unit_constant)
        while (s[0] == 0) s[0] = random_rat();
    return s;
}

}  // namespace

TEST_CASE("rationals are canonical") {
    for (int i = 0; i < 200; ++i) {
        const Rat q = random_rat() * random_rat();
        if (q == 0) continue;
        CHECK(gcd(abs(rat_num(q)), rat_den(q)) == 1);
        CHECK(rat_den(q) > 0);
    }
    CHECK(rat_to_string(Rat(-6, 4)) == "-3/2");
    CHECK(rat_from_string("-3/2") == Rat(-3, 2));
    CHECK(rat_from_string("7") == Rat(7));
}

TEST_CASE("synthetic division round-trips") {
    for (int i = 0; i < 200; ++i) {
        const Poly q = random_poly(8);
        const Rat c = random_rat();
        const Poly p = q * Poly::linear_root(c);
        CHECK(poly_div_exact_linear(p, c) == q);
    }
}

TEST_CASE("synthetic division rejects nonzero remainders") {
    for (int i = 0; i < 200; ++i) {
        Poly q = random_poly(6);
        const Rat c = random_rat();
        Rat offset = random_rat();
        while (offset == 0) offset = random_rat();
        const Poly p = q * Poly::linear_root(c) + Poly::constant(offset);
        CHECK_THROWS_AS(poly_div_exact_linear(p, c), NonzeroRemainder);
    }
}

TEST_CASE("series division multiplies back") {
    for (int i = 0; i < 200; ++i) {
        const unsigned N = 1 + static_cast<unsigned>(i % 12);
        const Series den = random_series(N, true);
        const Series num = random_series(N, false);
        const Series q = series_div(num, den);
        const Series back = q * den;
        for (unsigned k = 0; k <= N; ++k) CHECK(back[k] == num[k]);
    }
}

TEST_CASE("series division needs an invertible constant term") {
    Series den(4);
    den[1] = 1;
    Series num(4);
    num[0] = 1;
    CHECK_THROWS_AS(series_div(num, den), ZeroConstantTerm);
}

TEST_CASE("geometric inverse") {
    for (int i = 0; i < 50; ++i) {
        const Series den = random_series(10, true);
        const Series inv = Series::geometric_inverse(den);
        const Series prod = inv * den;
        CHECK(prod[0] == 1);
        for (unsigned k = 1; k <= 10; ++k) CHECK(prod[k] == 0);
    }
}

TEST_CASE("ratfunc evaluation commutes with arithmetic") {
    const Rat pole(-1);
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<unsigned> ord(0, 4);
        const RatFunc a(random_poly(5), pole, ord(rng));
        const RatFunc b(random_poly(5), pole, ord(rng));
        Rat u0 = random_rat();
        while (u0 == pole) u0 = random_rat();
        CHECK((a * b).eval(u0) == a.eval(u0) * b.eval(u0));
        CHECK((a + b).eval(u0) == a.eval(u0) + b.eval(u0));
        CHECK((a - b).eval(u0) == a.eval(u0) - b.eval(u0));
    }
}

TEST_CASE("ratfunc derivative matches the quotient rule numerically") {
    // d/du [P/(u-c)^m] evaluated at rational points, against the closed form.
    const Rat pole(-1);
    for (int i = 0; i < 50; ++i) {
        const Poly p = random_poly(4);
        const RatFunc f(p, pole, 2);
        const RatFunc df = f.derivative();
        const Rat u0(3, 2);
        const Rat expect =
            (p.derivative().eval(u0) * (u0 - pole) - Rat(2) * p.eval(u0)) /
            ((u0 - pole) * (u0 - pole) * (u0 - pole));
        CHECK(df.eval(u0) == expect);
    }
}

TEST_CASE("ratfunc stays reduced") {
    // Numerator divisible by (u - pole): the constructor must cancel it.
    const Rat pole(-1);
    const Poly p = Poly({Rat(2), Rat(3)}) * Poly::linear_root(pole);
    const RatFunc f(p, pole, 3);
    CHECK(f.pole_order() == 2);
    CHECK(f.numerator() == Poly({Rat(2), Rat(3)}));
}

TEST_CASE("ratfunc error paths") {
    const RatFunc a(Poly({Rat(1)}), Rat(-1), 1);
    const RatFunc b(Poly({Rat(1)}), Rat(2), 1);
    CHECK_THROWS_AS(a + b, PoleMismatch);
    CHECK_THROWS_AS(a.eval(Rat(-1)), EvalAtPole);
}
