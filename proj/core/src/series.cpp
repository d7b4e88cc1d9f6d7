#include "canard/series.hpp"

#include "canard/errors.hpp"

namespace canard {

bool Series::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Series Series::operator+(const Series& o) const {
    Series r(*this);
    for (std::size_t i = 0; i < r.c_.size() && i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Series Series::operator-(const Series& o) const {
    Series r(*this);
    for (std::size_t i = 0; i < r.c_.size() && i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

Series Series::operator*(const Series& o) const {
    Series r(order());
    const std::size_t n = c_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n && j < o.c_.size(); ++j) {
            if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

Series Series::operator*(const Rat& s) const {
    Series r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

Series Series::derivative() const {
    Series r(order());
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return r;
}

Series Series::shift_up(unsigned k) const {
    Series r(order());
    for (std::size_t i = 0; i + k < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

Series Series::shift_down(unsigned k) const {
    Series r(order());
    for (std::size_t i = k; i < c_.size(); ++i) r.c_[i - k] = c_[i];
    return r;
}

Series series_div(const Series& num, const Series& den) {
    if (den.coeffs().empty() || den[0] == 0)
        throw ZeroConstantTerm("series_div: divisor has zero constant term");
    const unsigned N = num.order();
    Series q(N);
    for (unsigned k = 0; k <= N; ++k) {
        Rat acc = num[k];
        for (unsigned j = 1; j <= k && j <= den.order(); ++j) {
            if (den[j] != 0 && q[k - j] != 0) acc -= den[j] * q[k - j];
        }
        q[k] = acc / den[0];
    }
    return q;
}

Series Series::geometric_inverse(const Series& den) {
    Series one(den.order());
    one[0] = 1;
    return series_div(one, den);
}

}  // namespace canard
