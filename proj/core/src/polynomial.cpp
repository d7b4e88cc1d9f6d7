#include "canard/polynomial.hpp"

#include "canard/errors.hpp"

namespace canard {

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    if (s == 0) return Poly();
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

Poly Poly::linear_power(const Rat& root, unsigned n) {
    Poly p = Poly::constant(Rat(1));
    Poly lin = Poly::linear_root(root);
    for (unsigned i = 0; i < n; ++i) p = p * lin;
    return p;
}

Poly poly_div_exact_linear(const Poly& p, const Rat& root) {
    if (p.is_zero()) return Poly();
    const auto& c = p.coeffs();
    const std::size_t d = c.size() - 1;
    if (d == 0) throw NonzeroRemainder("poly_div_exact_linear: remainder " + rat_to_string(c[0]));
    // Synthetic division: q_{d-1} = c_d, q_{i-1} = c_i + root*q_i,
    // remainder = c_0 + root*q_0 (must be exactly zero).
    std::vector<Rat> q(d, Rat(0));
    Rat acc = c[d];
    for (std::size_t i = d; i-- > 0;) {
        q[i] = acc;
        Rat next = c[i] + root * acc;
        if (i > 0) {
            acc = next;
        } else if (next != 0) {
            throw NonzeroRemainder("poly_div_exact_linear: remainder " + rat_to_string(next));
        }
    }
    return Poly(std::move(q));
}

}  // namespace canard
