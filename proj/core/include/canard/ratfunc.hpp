#pragma once

#include "canard/polynomial.hpp"

namespace canard {

// Rational function with a single pole: numerator(u) / (u - pole)^order.
// Fully reduced: when order > 0 the numerator does not vanish at the pole.
// This restricted shape is all the canard recurrences need (the Van der Pol
// v_n have their only pole at u = -1) and keeps reduction cheap.
class RatFunc {
  public:
    RatFunc() : pole_(0), order_(0) {}
    RatFunc(Poly numerator, Rat pole, unsigned order);

    static RatFunc constant(const Rat& a, const Rat& pole) {
        return RatFunc(Poly::constant(a), pole, 0);
    }

    const Poly& numerator() const { return num_; }
    const Rat& pole() const { return pole_; }
    unsigned pole_order() const { return order_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator*(const Rat& s) const;
    RatFunc derivative() const;

    // Throws EvalAtPole when u0 is the pole and the function actually has one.
    Rat eval(const Rat& u0) const;

  private:
    void reduce();
    Poly num_;
    Rat pole_;
    unsigned order_;
};

}  // namespace canard
