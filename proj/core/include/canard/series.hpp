#pragma once

#include <vector>

#include "canard/rational.hpp"

namespace canard {

// Power series in x truncated at a fixed order N: exactly N+1 stored
// coefficients c_0..c_N.  All arithmetic silently drops terms beyond N.
class Series {
  public:
    Series() = default;
    explicit Series(unsigned order) : c_(order + 1, Rat(0)) {}
    Series(std::vector<Rat> coeffs, unsigned order) : c_(std::move(coeffs)) {
        c_.resize(order + 1, Rat(0));
    }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }
    bool is_zero() const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const Rat& s) const;

    // d/dx, truncated back to the same order.
    Series derivative() const;
    // Multiply by x^k (shifts up, drops the tail).
    Series shift_up(unsigned k) const;
    // Divide by x^k; requires the first k coefficients to be zero.
    Series shift_down(unsigned k) const;

    static Series geometric_inverse(const Series& den);  // 1/den

  private:
    std::vector<Rat> c_;
};

// Quotient q with q*den == num modulo x^{N+1}.  Throws ZeroConstantTerm when
// den(0) = 0.
Series series_div(const Series& num, const Series& den);

}  // namespace canard
