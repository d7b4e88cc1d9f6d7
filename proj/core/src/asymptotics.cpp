#include "canard/asymptotics.hpp"

#include <cmath>

#include "canard/errors.hpp"

namespace canard {

FitResult fit_bn(const std::vector<std::pair<unsigned, double>>& data, FitModel model,
                 unsigned n_min, unsigned n_max) {
    if (n_max <= n_min) throw Error("fit_bn: empty range");
    const double expo = model == FitModel::inv_sqrt_n ? -0.5 : -1.0 / 3.0;
    double s1 = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
    unsigned count = 0;
    double first_x = 0;
    bool distinct = false;
    for (auto& [n, v] : data) {
        if (n < n_min || n > n_max) continue;
        const double x = std::pow(static_cast<double>(n), expo);
        if (count == 0) first_x = x;
        else if (x != first_x) distinct = true;
        s1 += 1;
        sx += x;
        sxx += x * x;
        sy += v;
        sxy += x * v;
        ++count;
    }
    if (count < 3) throw Error("fit_bn: need at least 3 points in range");
    if (!distinct) throw RankDeficient("fit_bn: all regressors identical");
    const double det = s1 * sxx - sx * sx;
    if (std::abs(det) < 1e-300) throw RankDeficient("fit_bn: singular normal equations");
    FitResult r;
    r.C = (sxx * sy - sx * sxy) / det;
    r.a = (s1 * sxy - sx * sy) / det;
    r.model = model;
    r.n_min = n_min;
    r.n_max = n_max;
    double ss = 0;
    for (auto& [n, v] : data) {
        if (n < n_min || n > n_max) continue;
        const double x = std::pow(static_cast<double>(n), expo);
        const double resid = v - r.C - r.a * x;
        ss += resid * resid;
    }
    r.residual_norm = std::sqrt(ss);
    return r;
}

std::vector<double> gevrey_ratio(const std::vector<Rat>& a) {
    std::vector<double> r;
    for (std::size_t n = 0; n + 1 < a.size(); ++n) {
        if (a[n] == 0) throw ZeroCoefficient("gevrey_ratio: a_n = 0 at n=" + std::to_string(n));
        // The quotient of consecutive coefficients is modest even when the
        // coefficients themselves are astronomically large.
        const Rat q = a[n + 1] / a[n];
        r.push_back(std::abs(static_cast<double>(q)) / static_cast<double>(n + 1));
    }
    return r;
}

SmallestTermSum sum_smallest_term(const std::vector<Rat>& a, double eps, unsigned digits) {
    if (eps <= 0) throw Error("sum_smallest_term: eps must be positive");
    const unsigned wd = digits + 15;
    const BigFloat e(eps, wd);
    // Locate the interior minimum of |a_n eps^n| in the log domain.
    std::size_t n_opt = 0;
    double best = 1e308;
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] == 0) continue;
        const double t = static_cast<double>(rat_log_abs(a[n], 20)) + n * std::log(eps);
        if (t < best) {
            best = t;
            n_opt = n;
        }
    }
    if (n_opt + 1 >= a.size())
        throw NoInteriorMinimum("sum_smallest_term: smallest term at range end");
    BigFloat sum(0, wd);
    BigFloat epow(1, wd);
    for (std::size_t n = 0; n <= n_opt; ++n) {
        BigFloat num(rat_num(a[n]), wd), den(rat_den(a[n]), wd);
        sum += num / den * epow;
        epow *= e;
    }
    return {sum, static_cast<unsigned>(n_opt)};
}

ConstantProbe brusselator_constant_probe(const std::vector<Rat>& a) {
    ConstantProbe probe;
    double log_fact = 0;
    for (std::size_t n = 1; n < a.size(); ++n) {
        log_fact += std::log(static_cast<double>(n));
        if (n < 3 || a[n] == 0) continue;
        const double log_scale =
            2 * std::log(static_cast<double>(n)) + n * std::log(1.5) + log_fact;
        const double log_an = static_cast<double>(rat_log_abs(a[n], 20));
        const double sign = a[n] < 0 ? -1.0 : 1.0;
        probe.c.emplace_back(static_cast<unsigned>(n), sign * std::exp(log_an - log_scale));
    }
    // Two Richardson levels in 1/n: the first removes a 1/n correction, the
    // second a 1/n^2 one.
    std::vector<double> l1;
    for (std::size_t i = 1; i < probe.c.size(); ++i) {
        const double n = probe.c[i].first, m = probe.c[i - 1].first;
        l1.push_back((n * probe.c[i].second - m * probe.c[i - 1].second) / (n - m));
    }
    std::vector<double> l2;
    for (std::size_t i = 1; i < l1.size(); ++i) {
        const double n = probe.c[i + 1].first, m = probe.c[i].first;
        l2.push_back((n * n * l1[i] - m * m * l1[i - 1]) / (n * n - m * m));
    }
    probe.extrapolated = l2.empty() ? (l1.empty() ? 0.0 : l1.back()) : l2.back();

    probe.candidates = {
        {"54", 54.0},
        {"108*e^-3/pi", 108.0 * std::exp(-3.0) / M_PI},
        {"108*e^-6/pi", 108.0 * std::exp(-6.0) / M_PI},
    };
    double best = 1e308;
    for (auto& [name, val] : probe.candidates) {
        const double d = std::abs(std::log(std::abs(probe.extrapolated) / val));
        if (d < best) {
            best = d;
            probe.nearest = name;
        }
    }
    return probe;
}

}  // namespace canard
