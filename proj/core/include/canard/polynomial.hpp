#pragma once

#include <vector>

#include "canard/rational.hpp"

namespace canard {

// Dense univariate polynomial over Rat, coefficients lowest degree first.
// Normalized: no trailing zero coefficients (the zero polynomial is empty).
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Poly constant(const Rat& a) { return Poly({a}); }
    // x - root
    static Poly linear_root(const Rat& root) { return Poly({-root, Rat(1)}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }

    Rat eval(const Rat& x) const;
    Poly derivative() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    Poly operator-() const { return *this * Rat(-1); }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // (x - root)^n for repeated use.
    static Poly linear_power(const Rat& root, unsigned n);

  private:
    void normalize();
    std::vector<Rat> c_;
};

// Exact synthetic division by (x - root).  Throws NonzeroRemainder unless
// p(root) = 0 exactly.
Poly poly_div_exact_linear(const Poly& p, const Rat& root);

}  // namespace canard
