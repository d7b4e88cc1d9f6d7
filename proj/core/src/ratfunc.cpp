#include "canard/ratfunc.hpp"

#include "canard/errors.hpp"

namespace canard {

RatFunc::RatFunc(Poly numerator, Rat pole, unsigned order)
    : num_(std::move(numerator)), pole_(std::move(pole)), order_(order) {
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        order_ = 0;
        return;
    }
    while (order_ > 0 && num_.eval(pole_) == 0) {
        num_ = poly_div_exact_linear(num_, pole_);
        --order_;
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (pole_ != o.pole_) throw PoleMismatch("RatFunc: poles differ");
    unsigned m = std::max(order_, o.order_);
    Poly a = num_ * Poly::linear_power(pole_, m - order_);
    Poly b = o.num_ * Poly::linear_power(pole_, m - o.order_);
    return RatFunc(a + b, pole_, m);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (o * Rat(-1)); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc(Poly(), pole_, 0);
    if (pole_ != o.pole_) throw PoleMismatch("RatFunc: poles differ");
    return RatFunc(num_ * o.num_, pole_, order_ + o.order_);
}

RatFunc RatFunc::operator*(const Rat& s) const { return RatFunc(num_ * s, pole_, order_); }

RatFunc RatFunc::derivative() const {
    // (N/(u-c)^m)' = (N'(u-c) - m N)/(u-c)^{m+1}
    if (order_ == 0) return RatFunc(num_.derivative(), pole_, 0);
    Poly top = num_.derivative() * Poly::linear_root(pole_) - num_ * Rat(static_cast<long>(order_));
    return RatFunc(std::move(top), pole_, order_ + 1);
}

Rat RatFunc::eval(const Rat& u0) const {
    if (order_ > 0 && u0 == pole_) throw EvalAtPole("RatFunc: evaluation at the pole");
    Rat n = num_.eval(u0);
    if (order_ == 0) return n;
    Rat d = 1;
    Rat lin = u0 - pole_;
    for (unsigned i = 0; i < order_; ++i) d *= lin;
    return n / d;
}

}  // namespace canard
